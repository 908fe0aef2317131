"""Parallelograms and squares from fixed points of vertex rotations of a quadrilateral."""

__version__ = "0.1.0"
