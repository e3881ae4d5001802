"""Exact rank over Q(z_L) by fraction-free (Bareiss) elimination on sparse rows."""

from __future__ import annotations

from .cyclotomic import cyc_inv


def rank(rows, zero=None) -> int:
    """Rank of a matrix given as a list of sparse rows {column: scalar}.

    Bareiss update: r_i <- (p * r_i - r_i[c] * pivot_row) / previous_pivot, the
    division being exact.  Rows are never densified.
    """
    work = [dict(r) for r in rows if r]
    r = 0
    prev = None
    while work:
        # pick the row whose leading column is smallest; ties by fewest entries
        best = min(range(len(work)), key=lambda k: (min(work[k]), len(work[k])))
        pivot_row = work.pop(best)
        col = min(pivot_row)
        p = pivot_row[col]
        inv_prev = cyc_inv(prev) if prev is not None else None
        nxt = []
        for row in work:
            c = row.get(col)
            if c is None:
                if inv_prev is not None:
                    # keep the Bareiss invariant: scale by p / prev
                    scale = p * inv_prev
                    row = {k: v * scale for k, v in row.items()}
                else:
                    row = {k: v * p for k, v in row.items()}
                nxt.append(row)
                continue
            new = {}
            for k, v in row.items():
                if k != col:
                    new[k] = v * p
            for k, v in pivot_row.items():
                if k == col:
                    continue
                t = new.get(k)
                s = (t if t is not None else p * 0) - c * v
                if s:
                    new[k] = s
                elif t is not None:
                    del new[k]
            if inv_prev is not None:
                new = {k: v * inv_prev for k, v in new.items()}
            if new:
                nxt.append(new)
        work = nxt
        prev = p
        r += 1
    return r
