"""Exact verification of triple closure, reductivity and Lie-triple-system
identities for Mal'tsev algebras and their translation-operator models."""

__version__ = "0.1.0"
