"""
Core Module
단어, 정규형 재작성, 입출력 및 오류 정의 핵심 모듈
"""

from .errors import (
    InvalidContentError,
    KiselmanError,
    LetterOutOfRangeError,
    NotIdempotentError,
    NotNilpotentError,
    NotUnionClosedError,
    RankMismatchError,
    ResourceLimitError,
    StepNotApplicableError,
    WordParseError,
)
from .words import (
    MAX_RANK,
    Content,
    Word,
    all_contents,
    content,
    delete_letter,
    format_word,
    is_canonical,
    length_bound,
    letter_multiplicity_bounds,
    multiplicity,
    parse_content,
    parse_word,
    random_word,
    sharpness_word,
)
from .rewrite import (
    STRATEGIES,
    ReductionStep,
    ReductionTrace,
    StepKind,
    applicable_steps,
    apply_step,
    confluence_check,
    is_irreducible,
    normalize,
    normalize_traced,
    reachable_normal_forms,
)
from .io import dumps_csv, dumps_json, load_json, save_json, save_text
from .linalg import exact_rank
from .report import CheckReport, CheckResult

__all__ = [
    "InvalidContentError",
    "KiselmanError",
    "LetterOutOfRangeError",
    "NotIdempotentError",
    "NotNilpotentError",
    "NotUnionClosedError",
    "RankMismatchError",
    "ResourceLimitError",
    "StepNotApplicableError",
    "WordParseError",
    "MAX_RANK",
    "Content",
    "Word",
    "all_contents",
    "content",
    "delete_letter",
    "format_word",
    "is_canonical",
    "length_bound",
    "letter_multiplicity_bounds",
    "multiplicity",
    "parse_content",
    "parse_word",
    "random_word",
    "sharpness_word",
    "STRATEGIES",
    "ReductionStep",
    "ReductionTrace",
    "StepKind",
    "applicable_steps",
    "apply_step",
    "confluence_check",
    "is_irreducible",
    "normalize",
    "normalize_traced",
    "reachable_normal_forms",
    "dumps_csv",
    "dumps_json",
    "load_json",
    "save_json",
    "save_text",
    "exact_rank",
    "CheckReport",
    "CheckResult",
]
