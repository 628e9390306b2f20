from .pipeline import run_pipeline, RewriteSuite

# Words & rewriting
from .core.words import Word, Content, parse_word, parse_content, is_canonical, length_bound
from .core.rewrite import normalize, normalize_traced, confluence_check
from .core.errors import KiselmanError, ResourceLimitError

# Semigroup
from .semigroup.table import SemigroupTable, SemigroupEnumerator, enumerate_semigroup, multiply
from .semigroup.pipeline import StructurePipeline, run_structure_checks

# Representations
from .representations.matrices import psi
from .representations.polynomial import kappa, kappa_prime
from .representations.pipeline import RepresentationPipeline, run_representation_checks

# Semigroup algebra
from .algebra.element import SemigroupAlgebra, AlgebraElement
from .algebra.pipeline import AlgebraPipeline, run_algebra_checks
