"""Framed cord algebra HC_0 of braid closures in S1 x S2."""

from .action import LambdaMatrix, SentinelMatrix, extract_matrices, phi_generator, phi_word, word_image
from .algebra import Context, Generator, NCPoly, connect, normalize
from .augment import AugQuery, constant_augmentation_check, count_augmentations
from .braid import BraidWord, embed, invert, is_knot, parse_braid, permutation, reflect, torus_braid, word
from .errors import CordalError
from .kernel import IMPL as KERNEL
from .oracle import CurveWord, oracle_phi, psi
from .relations import relation, relation_set
from .ring import GAMMA, LAMBDA, MU, LaurentScalar
from .torus import Presentation, braid_presentation, detect_closure, finite_presentation

__version__ = "0.1.0"

__all__ = [
    "AugQuery", "BraidWord", "Context", "CordalError", "CurveWord", "GAMMA", "Generator", "KERNEL",
    "LAMBDA", "LambdaMatrix", "LaurentScalar", "MU", "NCPoly", "Presentation", "SentinelMatrix",
    "braid_presentation", "connect", "constant_augmentation_check", "count_augmentations",
    "detect_closure", "embed", "extract_matrices", "finite_presentation", "invert", "is_knot",
    "normalize", "oracle_phi", "parse_braid", "permutation", "phi_generator", "phi_word", "psi",
    "reflect", "relation", "relation_set", "torus_braid", "word", "word_image",
]
