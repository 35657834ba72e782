"""Tuples, canonical tuples and their lattice operations."""

from typing import Iterable, List, Sequence, Tuple

from .signature import LambdaSignature
from ..utils.exceptions import TupleError

PTuple = Tuple[int, ...]


def tuple_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def tuple_meet(a: Sequence[int], b: Sequence[int]) -> PTuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def tuple_join(a: Sequence[int], b: Sequence[int]) -> PTuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def tuple_label(a: Sequence[int], prefix: str = "R") -> str:
    return f"{prefix}(" + ",".join(str(x) for x in a) + ")"


def check_range(a: Sequence[int], sig: LambdaSignature) -> PTuple:
    """
    Validate ``0 <= a <= lambda`` componentwise.

    Raises:
        TupleError: On length mismatch or out-of-range entries
    """
    a = tuple(int(x) for x in a)
    if len(a) != sig.n:
        raise TupleError(f"tuple {a} has length {len(a)}, signature has {sig.n} factors")
    if any(x < 0 or x > lam for x, lam in zip(a, sig.lambdas)):
        raise TupleError(f"tuple {a} is outside 0 <= a <= {sig.lambdas}")
    return a


def is_canonical(a: Sequence[int], sig: LambdaSignature) -> bool:
    """
    Both canonical conditions: ``a_i <= a_{i+1}`` and ``a_{i+1} - a_i <= lambda_{i+1} - lambda_i``.

    Raises:
        TupleError: If ``a`` is out of range
    """
    a = check_range(a, sig)
    lam = sig.lambdas
    return all(a[i] <= a[i + 1] and a[i + 1] - a[i] <= lam[i + 1] - lam[i] for i in range(sig.n - 1))


def canonicalize(a: Sequence[int], sig: LambdaSignature) -> PTuple:
    """
    The canonical tuple labelling the automorphism class that contains T(a).

    Computed as the least canonical tuple above ``a`` by iterating
    ``b_i <- max(a_i, b_{i-1}, b_{i+1} - (lambda_{i+1} - lambda_i))`` to a fixpoint.
    """
    a = check_range(a, sig)
    lam = sig.lambdas
    b = list(a)
    changed = True
    while changed:
        changed = False
        for i in range(sig.n):
            value = b[i]
            if i > 0:
                value = max(value, b[i - 1])
            if i + 1 < sig.n:
                value = max(value, b[i + 1] - (lam[i + 1] - lam[i]))
            if value != b[i]:
                b[i] = value
                changed = True
    return tuple(b)


def canonical_tuples(sig: LambdaSignature) -> List[PTuple]:
    """All canonical tuples in lexicographic order."""
    lam = sig.lambdas
    result: List[PTuple] = []

    def extend(prefix: List[int]) -> None:
        i = len(prefix)
        if i == sig.n:
            result.append(tuple(prefix))
            return
        low = prefix[-1] if prefix else 0
        high = lam[i] if i == 0 else min(lam[i], prefix[-1] + lam[i] - lam[i - 1])
        for x in range(low, high + 1):
            extend(prefix + [x])

    extend([])
    return result


def count_classes(sig: LambdaSignature) -> int:
    """Number of automorphism classes: the product of ``lambda_i - lambda_{i-1} + 1``."""
    result = 1
    for i in range(1, sig.n + 1):
        result *= sig.lam(i) - sig.lam(i - 1) + 1
    return result


def tuple_weight(a: Sequence[int]) -> int:
    """``sum(a)``; ``|R(a)| = p^weight``."""
    return int(sum(a))


def psi_signature(n: int, p: int) -> LambdaSignature:
    """The signature ``(1, 3, ..., 2n-1)`` hosting the boolean-lattice embedding."""
    return LambdaSignature(p, tuple(2 * i - 1 for i in range(1, n + 1)))


def psi_embed(sig: LambdaSignature, subset: Iterable[int]) -> PTuple:
    """
    Embed a subset ``Y`` of ``{1, ..., n}`` as a canonical tuple.

    ``a_i = i`` if ``i`` is in ``Y`` and ``i - 1`` otherwise.

    Raises:
        TupleError: If the signature is not ``(1, 3, ..., 2n-1)`` or ``Y`` is out of range
    """
    n = sig.n
    if sig.lambdas != tuple(2 * i - 1 for i in range(1, n + 1)):
        raise TupleError(f"psi embedding needs lambda = (1,3,...,{2 * n - 1}), got {sig.lambdas}")
    Y = set(int(y) for y in subset)
    if any(y < 1 or y > n for y in Y):
        raise TupleError(f"subset {sorted(Y)} is not inside 1..{n}")
    return tuple(i if i in Y else i - 1 for i in range(1, n + 1))
