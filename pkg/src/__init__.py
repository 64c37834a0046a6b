# lambdalin: linear-algebraic lambda-calculus toolkit
__version__ = "0.1.0"
