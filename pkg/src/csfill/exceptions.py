"""Exceptions raised by csfill."""


class CSFillError(Exception):
    """Base class for all csfill errors."""


class PreconditionError(CSFillError, ValueError):
    """An operation was called outside its stated domain.

    The message names the violated precondition; the CLI maps this to
    exit status 3.
    """


class SchemaError(CSFillError, ValueError):
    """Input data does not match the expected JSON/text schema (CLI exit 2)."""
