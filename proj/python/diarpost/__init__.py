"""Speaker-diarization post-processing toolkit.

Thin Python surface over the C++ core: compact transcript codec,
word/segment orchestration, transcript-preserving speaker transfer, prompt
building, completion parsing, WER/WDER/cpWER metrics, and seeded
training-data generation.
"""

from diarpost._core import (
    SCHEMA_VERSION,
    DiarError,
    __version__,
    build_prompts,
    build_synthesis_prompt,
    cpwer,
    degrade_speakers,
    edit_distance,
    finalize,
    interval_distance,
    interval_overlap,
    measure,
    one_shot_prefix,
    orchestrate,
    parse,
    sample_synthesis_spec,
    scenes,
    serialize,
    topics,
    transfer_speakers,
    truncate_completion,
    validate,
    wder,
    wer,
    zero_shot_prefix,
)

__all__ = [
    "SCHEMA_VERSION",
    "DiarError",
    "__version__",
    "build_prompts",
    "build_synthesis_prompt",
    "cpwer",
    "degrade_speakers",
    "edit_distance",
    "finalize",
    "interval_distance",
    "interval_overlap",
    "measure",
    "one_shot_prefix",
    "orchestrate",
    "parse",
    "sample_synthesis_spec",
    "scenes",
    "serialize",
    "topics",
    "transfer_speakers",
    "truncate_completion",
    "validate",
    "wder",
    "wer",
    "zero_shot_prefix",
]
