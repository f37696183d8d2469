"""Desk-scale computation with finite Gray-categories."""

from .report import (BudgetExceeded, ConsistencyError, GraycatError, InputError,
                     UnsupportedOperation, ValidationReport, Violation)
from .cells import (Category, CatFunctor, GrayCategory, GrayFunctor,
                    Sesquicategory, TwoCategory, TwoFunctor,
                    compose_gray_functors, empty_gray_category,
                    empty_two_category, identity_gray_functor, pair_gray_functors,
                    product_gray, terminal_category, terminal_gray_category,
                    terminal_two_category, unique_functor_to_terminal)

__all__ = [name for name in dir() if not name.startswith("_")]
