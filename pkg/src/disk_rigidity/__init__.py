# file: src/disk_rigidity/__init__.py
"""
Disk rigidity toolkit: boundary rigidity checks for holomorphic self-maps and
semigroups of the unit disk.
"""

__version__ = "0.1.0"
