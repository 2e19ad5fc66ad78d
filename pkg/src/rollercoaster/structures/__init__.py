"""Search structures behind the exact longest-rollercoaster search."""
from .aggregate import AggregateSearchTree
from .perm_findmax import PermFindMax
from .suffix_max import SuffixMaxStructure
from .veb import SuccessorDict

__all__ = ["AggregateSearchTree", "PermFindMax", "SuffixMaxStructure", "SuccessorDict"]
