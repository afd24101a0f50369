"""Sparse linear operators on tensor products of sl(2) irreps.

An operator stores its columns: ``cols[j][i]`` is the coefficient of basis
vector ``i`` in the image of basis vector ``j``.  Basis vectors are index
tuples ``(k_1, ..., k_r)`` with ``0 <= k_t <= dims[t]``.
"""
from __future__ import annotations

from itertools import product

from .scalars import Rat


def basis(dims):
    return list(product(*(range(d + 1) for d in dims)))


def _prune(col):
    return {i: c for i, c in col.items() if c}


class Operator:
    __slots__ = ("dims", "cols")

    def __init__(self, dims, cols):
        self.dims = tuple(dims)
        self.cols = {j: _prune(col) for j, col in cols.items()}

    @classmethod
    def identity(cls, dims, one=Rat(1)):
        return cls(dims, {b: {b: one} for b in basis(dims)})

    def column(self, j):
        return self.cols.get(tuple(j), {})

    def entry(self, i, j):
        return self.cols.get(tuple(j), {}).get(tuple(i), Rat(0))

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if self.dims != other.dims:
            raise ValueError(f"dimension mismatch {self.dims} vs {other.dims}")
        out = {}
        for j, col in other.cols.items():
            acc = {}
            for k, c in col.items():
                for i, a in self.cols.get(k, {}).items():
                    t = a * c
                    acc[i] = acc[i] + t if i in acc else t
            out[j] = acc
        return Operator(self.dims, out)

    def __eq__(self, other):
        if not isinstance(other, Operator) or self.dims != other.dims:
            return NotImplemented
        keys = set(self.cols) | set(other.cols)
        return all(self.cols.get(j, {}) == other.cols.get(j, {}) for j in keys)

    def map_entries(self, fn):
        return Operator(self.dims, {j: {i: fn(c) for i, c in col.items()} for j, col in self.cols.items()})

    def conjugate_by_permutation(self, perm):
        """``P A P^-1`` where ``P`` sends slot ``t`` of the input to slot ``perm[t]``."""
        def move(idx):
            out = [None] * len(idx)
            for t, p in enumerate(perm):
                out[p] = idx[t]
            return tuple(out)

        dims = move(self.dims)
        return Operator(dims, {move(j): {move(i): c for i, c in col.items()} for j, col in self.cols.items()})

    def is_identity(self):
        for b in basis(self.dims):
            col = self.cols.get(b, {})
            if len(col) != 1 or col.get(b) != 1:
                return False
        return True

    def dense(self):
        order = basis(self.dims)
        return [[self.entry(i, j) for j in order] for i in order]
