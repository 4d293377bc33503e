"""The all-white generators of the k-half-liberated unitary series and the
composition identities relating them to the S_k generators."""

from __future__ import annotations

from ..brackets import br, gen_S_w, id_partition
from ..core import BLACK, EMPTY, WHITE, Partition, PartitionError, L, U
from ..ops import compose_chain, involution, tensor, tensor_all


def _check_k(k: int) -> None:
    if k < 1:
        raise PartitionError("k must be at least 1")


def unk_block_swap(k: int) -> Partition:
    """2k white points per row; the two halves of k strings swap places."""
    _check_k(k)
    blocks = [(L(i), U(k + i)) for i in range(1, k + 1)]
    blocks += [(L(k + i), U(i)) for i in range(1, k + 1)]
    return Partition([WHITE] * 2 * k, [WHITE] * 2 * k, blocks)


def unk_outer_cross(k: int) -> Partition:
    """k+1 white points per row: the outer strings cross, k-1 straight strings between."""
    _check_k(k)
    n = k + 1
    blocks = [(L(1), U(n)), (L(n), U(1))] + [(L(i), U(i)) for i in range(2, n)]
    return Partition([WHITE] * n, [WHITE] * n, blocks)


def unk_generators(k: int) -> tuple[Partition, Partition]:
    """``(outer cross generator, gen_S_w(k, black))``; both generate S_k."""
    return unk_outer_cross(k), gen_S_w(k, BLACK)


def nested_caps(k: int) -> Partition:
    """No lower row; upper row w^(k-1) b^(k-1) with nested pairs."""
    _check_k(k)
    m = k - 1
    upper = [WHITE] * m + [BLACK] * m
    return Partition(upper, [], [(U(i), U(2 * m + 1 - i)) for i in range(1, m + 1)])


def block_swap_to_outer_cross(k: int) -> Partition:
    """Close k-1 strings of the block swap with caps and cups."""
    cap = nested_caps(k)
    w = [WHITE] * (k + 1)
    layers = [
        tensor(id_partition(w), cap),
        tensor(unk_block_swap(k), id_partition([BLACK] * (k - 1))),
        tensor(id_partition(w), involution(cap)),
    ]
    return compose_chain(layers).result


def outer_cross_to_block_swap(k: int) -> Partition:
    """Stack k shifted copies of the outer cross."""
    _check_k(k)
    x = unk_outer_cross(k)
    layers = [tensor_all([id_partition([WHITE] * j), x, id_partition([WHITE] * (k - 1 - j))])
              for j in range(k - 1, -1, -1)]
    return compose_chain(layers).result


def outer_cross_to_bracket(k: int) -> Partition:
    """Conjugate a minimal bracket by the outer cross; gives ``Br(w | Id(w^k) | b)``."""
    xb = tensor(unk_outer_cross(k), id_partition([BLACK]))
    mid = tensor(id_partition([WHITE] * k), br(WHITE, EMPTY))
    return compose_chain([xb, mid, xb]).result


def bracket_to_outer_cross(k: int) -> Partition:
    """Recover the outer cross from ``Br(w | Id(w^k) | b)``."""
    _check_k(k)
    n = k + 1
    w, b = WHITE, BLACK
    bottom = Partition([w] * n + [b, w], [w] * n,
                       [(L(i), U(i)) for i in range(1, k + 1)]
                       + [(L(n), U(n + 2)), (U(n), U(n + 1))])
    middle = tensor(br(w, id_partition([w] * k)), id_partition([w]))
    top = tensor(id_partition([w] * n), Partition([], [b, w], [(L(1), L(2))]))
    return compose_chain([bottom, middle, top]).result
