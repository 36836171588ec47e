"""Activation-function kernels with verified analytic derivatives."""

from ._core import (
    ActivationSpec,
    compare,
    count_ops,
    eval,
    eval_batch,
    eval_grad,
    find_min,
    grad_batch,
    mish_grad_closed_form,
    spec,
    verify,
    __version__,
)

__all__ = [
    "ActivationSpec",
    "compare",
    "count_ops",
    "eval",
    "eval_batch",
    "eval_grad",
    "find_min",
    "grad_batch",
    "mish_grad_closed_form",
    "spec",
    "verify",
    "__version__",
]
