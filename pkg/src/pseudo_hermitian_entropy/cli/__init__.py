"""
CLI Module for Pseudo-Hermitian Entropy

Provides the command-line interface for experiments, figures and verification.
"""

from .main import cli

__all__ = ["cli"]
