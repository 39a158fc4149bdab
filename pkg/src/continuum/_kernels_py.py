"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module."""

from math import lcm


def lex_compare_bits(px, qx, py, qy):
    """First-difference comparison of ``px·(qx)^ω`` and ``py·(qy)^ω``.

    Words are ``bytes`` of 0/1 values; periods must be nonempty.
    Returns -1, 0 or 1.
    """
    lpx, lqx, lpy, lqy = len(px), len(qx), len(py), len(qy)
    bound = max(lpx, lpy) + lcm(lqx, lqy)
    for k in range(bound):
        a = px[k] if k < lpx else qx[(k - lpx) % lqx]
        b = py[k] if k < lpy else qy[(k - lpy) % lqy]
        if a != b:
            return -1 if a < b else 1
    return 0


def stadium_passings(n_bodies, ticks):
    """Brute-force the three-row stadium on a ring track of ``n_bodies`` slots.

    Coordinates are in half body-widths so both moving rows advance in unit
    sub-moves. A passing is recorded whenever the front edge of B's lead body
    lines up with the rear edge of some body in the other row. Returns
    ``(passings_b_vs_c, passings_b_vs_a)``.
    """
    if n_bodies < 1 or ticks < 1:
        raise ValueError("n_bodies and ticks must be >= 1")
    track = 2 * n_bodies
    b_off = 0
    c_off = 0
    bc = 0
    ba = 0
    for _ in range(ticks):
        for mover in (1, -1, 1, -1):
            if mover == 1:
                b_off += 1
            else:
                c_off -= 1
            front = (2 * (n_bodies - 1) + 2 + b_off) % track
            for j in range(n_bodies):
                if (2 * j + c_off) % track == front:
                    bc += 1
                    break
            if mover == 1:
                for j in range(n_bodies):
                    if (2 * j) % track == front:
                        ba += 1
                        break
    return bc, ba


def leaf_audit(depth):
    """Sweep the ``2**depth`` leaves left to right in units of ``2**-depth``.

    Leaf ``i`` spans ``[i, i + 1]`` (its label read as a binary integer).
    Returns ``(width_units, shared, breaks)``: the summed widths, the number
    of neighbouring leaves meeting in exactly one endpoint, and the number
    that leave a gap or overlap.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    width_units = 0
    shared = 0
    breaks = 0
    prev_upper = None
    for label in range(1 << depth):
        lower = label
        upper = label + 1
        width_units += upper - lower
        if prev_upper is not None:
            if prev_upper == lower:
                shared += 1
            else:
                breaks += 1
        prev_upper = upper
    return width_units, shared, breaks
