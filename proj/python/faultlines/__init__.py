"""Python bindings for the faultlines core.

The heavy lifting (parsing, fault injection, semantic-preserving mutation,
prompt construction, answer parsing) lives in the C++ extension module.
"""

from faultlines._core import (  # noqa: F401
    FaultlinesError,
    __version__,
    apply_spm,
    build_prompt,
    estimate_tokens,
    inject_fault,
    parse_answer,
    parse_source,
    quartile_of,
    run_pipeline,
    standard_mutant_set,
)

__all__ = [
    "FaultlinesError",
    "apply_spm",
    "build_prompt",
    "estimate_tokens",
    "inject_fault",
    "parse_answer",
    "parse_source",
    "quartile_of",
    "run_pipeline",
    "standard_mutant_set",
]
