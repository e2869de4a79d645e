"""Desk-scale computational algebra: finite group tables, extraspecial
p-groups, modules over prime fields, group-algebra semidirect families,
exact bound arithmetic and Kummer radical towers."""

__version__ = "0.1.0"
