"""kiricap: design and simulation toolkit for kirigami-skinned, cam-driven biopsy capsules."""

__version__ = "0.1.0"
