"""Tests for pseudo_hermitian_entropy package."""
