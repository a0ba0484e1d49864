"""Genus-2 curve arithmetic: invariants, theta functions, Richelot and
(n,n)-isogenies, Kummer surface models, split-Jacobian detection, and
superspecial graph walks."""

__version__ = "0.1.0"
