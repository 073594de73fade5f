"""repring: exact modular representation theory of finite groups.

Everything is computed over explicit splitting fields with integer-coded
field elements and exact cyclotomic lifts; no floating point anywhere.
"""

__version__ = "0.1.0"
