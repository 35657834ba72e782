"""Test suite for the Schur ring engine."""
