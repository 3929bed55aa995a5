"""Edge-colourings of complete graphs with no monochromatic K_m and no rainbow K_4,
built from incidence graphs of finite projective planes."""

from .admissibility import is_admissible, theorem_bound
from .colouring import EdgeColouring, WordPair, expand_words, extract_words
from .projective_plane import build_plane, levi_graph, rotational_cycle
from .search import SearchConfig, search_rotational

__version__ = "0.1.0"

__all__ = [
    "EdgeColouring", "SearchConfig", "WordPair", "build_plane", "expand_words",
    "extract_words", "is_admissible", "levi_graph", "rotational_cycle",
    "search_rotational", "theorem_bound",
]
