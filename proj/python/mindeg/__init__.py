"""Minimal faithful permutation degree of finite groups."""

from ._mindeg import *  # noqa: F401,F403
from ._mindeg import Group, mu

__all__ = ["Group", "mu"]
