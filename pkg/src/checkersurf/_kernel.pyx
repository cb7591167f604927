# cython: language_level=3, boundscheck=False, wraparound=False
"""Canonical labeling of triangle gluings, compiled twin of _kernel_py.

Same algorithm and output contract as _kernel_py.canonical_code; see that
module for the phase descriptions. Kept in lockstep by
tests/test_kernel_parity.py.
"""

from libc.stdlib cimport malloc, free

BACKEND_NAME = "c"


def canonical_code(n_in, blue, red, yellow, alpha_in, beta_in, strip_in):
    """Return (n2, blue2, red2, yellow2), the canonical relabeled arrays."""
    cdef int n = n_in
    cdef int alpha = alpha_in
    cdef int beta = beta_in
    cdef bint strip = 1 if strip_in else 0
    if alpha < 0 or beta < 0 or alpha > n or beta > n:
        raise ValueError(
            "label counts alpha=%r beta=%r out of range for n=%r" % (alpha_in, beta_in, n_in)
        )
    if n == 0:
        return 0, (), (), ()

    cdef int *buf = <int *> malloc(sizeof(int) * 24 * n)
    if buf == NULL:
        raise MemoryError()
    cdef int *b = buf
    cdef int *r = buf + n
    cdef int *y = buf + 2 * n
    cdef int *ib = buf + 3 * n
    cdef int *ir = buf + 4 * n
    cdef int *iy = buf + 5 * n
    cdef int *white_num = buf + 6 * n
    cdef int *black_num = buf + 7 * n
    cdef int *queue = buf + 8 * n          # 2n slots
    cdef int *stack = buf + 10 * n
    cdef int *whites = buf + 11 * n
    cdef int *lw = buf + 12 * n
    cdef int *lb = buf + 13 * n
    cdef int *lw_stamp = buf + 14 * n
    cdef int *lb_stamp = buf + 15 * n
    cdef int *order_w = buf + 16 * n
    cdef int *comp_seen = buf + 17 * n
    cdef int *tmp = buf + 18 * n           # 3n slots
    cdef int *best = buf + 21 * n          # 3n slots

    cdef int *imgs[3]
    cdef int *invs[3]
    cdef int *ob
    cdef int i, j, w, w0, w2, bb, v, k, ci, ri, root, sp
    cdef int next_w, next_b, head, tail, run, have_best, less
    cdef int n2, off_w, off_b, kk

    try:
        for w in range(n):
            ib[w] = -1
            ir[w] = -1
            iy[w] = -1
        for w in range(n):
            i = blue[w]
            if i < 0 or i >= n or ib[i] >= 0:
                raise ValueError("blue is not a bijection of range(n)")
            b[w] = i
            ib[i] = w
            i = red[w]
            if i < 0 or i >= n or ir[i] >= 0:
                raise ValueError("red is not a bijection of range(n)")
            r[w] = i
            ir[i] = w
            i = yellow[w]
            if i < 0 or i >= n or iy[i] >= 0:
                raise ValueError("yellow is not a bijection of range(n)")
            y[w] = i
            iy[i] = w
        imgs[0] = b
        imgs[1] = r
        imgs[2] = y
        invs[0] = ib
        invs[1] = ir
        invs[2] = iy
        for w in range(n):
            white_num[w] = -1
            black_num[w] = -1
            lw_stamp[w] = -1
            lb_stamp[w] = -1
            comp_seen[w] = 0

        # Phase A: whites encoded 2w, blacks 2b+1; pins enqueued whites first.
        for w in range(beta):
            white_num[w] = w
        for i in range(alpha):
            black_num[i] = i
        next_w = beta
        next_b = alpha
        head = 0
        tail = 0
        for w in range(beta):
            queue[tail] = 2 * w
            tail += 1
        for i in range(alpha):
            queue[tail] = 2 * i + 1
            tail += 1
        while head < tail:
            v = queue[head]
            head += 1
            if v & 1:
                i = v >> 1
                for ci in range(3):
                    w = invs[ci][i]
                    if white_num[w] < 0:
                        white_num[w] = next_w
                        next_w += 1
                        queue[tail] = 2 * w
                        tail += 1
            else:
                w = v >> 1
                for ci in range(3):
                    i = imgs[ci][w]
                    if black_num[i] < 0:
                        black_num[i] = next_b
                        next_b += 1
                        queue[tail] = 2 * i + 1
                        tail += 1

        # Phase B: unpinned components.
        kept = []
        run = 0
        for w0 in range(n):
            if white_num[w0] >= 0 or comp_seen[w0]:
                continue
            sp = 0
            stack[sp] = w0
            sp += 1
            comp_seen[w0] = 1
            k = 0
            while sp > 0:
                sp -= 1
                w = stack[sp]
                whites[k] = w
                k += 1
                for ci in range(3):
                    bb = imgs[ci][w]
                    for j in range(3):
                        w2 = invs[j][bb]
                        if comp_seen[w2] == 0:
                            comp_seen[w2] = 1
                            stack[sp] = w2
                            sp += 1
            if strip and k == 1:
                continue
            have_best = 0
            for ri in range(k):
                root = whites[ri]
                run += 1
                lw[root] = 0
                lw_stamp[root] = run
                order_w[0] = root
                head = 0
                tail = 0
                queue[tail] = 2 * root
                tail += 1
                i = 1          # local white counter
                j = 0          # local black counter
                while head < tail:
                    v = queue[head]
                    head += 1
                    if v & 1:
                        bb = v >> 1
                        for ci in range(3):
                            w = invs[ci][bb]
                            if lw_stamp[w] != run:
                                lw_stamp[w] = run
                                lw[w] = i
                                order_w[i] = w
                                i += 1
                                queue[tail] = 2 * w
                                tail += 1
                    else:
                        w = v >> 1
                        for ci in range(3):
                            bb = imgs[ci][w]
                            if lb_stamp[bb] != run:
                                lb_stamp[bb] = run
                                lb[bb] = j
                                j += 1
                                queue[tail] = 2 * bb + 1
                                tail += 1
                for i in range(k):
                    w = order_w[i]
                    tmp[3 * i] = lb[b[w]]
                    tmp[3 * i + 1] = lb[r[w]]
                    tmp[3 * i + 2] = lb[y[w]]
                if have_best == 0:
                    for i in range(3 * k):
                        best[i] = tmp[i]
                    have_best = 1
                else:
                    less = 0
                    for i in range(3 * k):
                        if tmp[i] != best[i]:
                            if tmp[i] < best[i]:
                                less = 1
                            break
                    if less:
                        for i in range(3 * k):
                            best[i] = tmp[i]
            kept.append((k, tuple([best[i] for i in range(3 * k)])))
        kept.sort()

        # Phase C: pinned part first, then sorted component blocks.
        n2 = next_w
        for item in kept:
            n2 += <int> item[0]
        if n2 == 0:
            return 0, (), (), ()
        ob = <int *> malloc(sizeof(int) * 3 * n2)
        if ob == NULL:
            raise MemoryError()
        try:
            for w in range(n):
                if white_num[w] >= 0:
                    ob[white_num[w]] = black_num[b[w]]
                    ob[n2 + white_num[w]] = black_num[r[w]]
                    ob[2 * n2 + white_num[w]] = black_num[y[w]]
            off_w = next_w
            off_b = next_b
            for item in kept:
                kk = <int> item[0]
                codet = item[1]
                for i in range(kk):
                    ob[off_w + i] = off_b + <int> codet[3 * i]
                    ob[n2 + off_w + i] = off_b + <int> codet[3 * i + 1]
                    ob[2 * n2 + off_w + i] = off_b + <int> codet[3 * i + 2]
                off_w += kk
                off_b += kk
            return (
                n2,
                tuple([ob[i] for i in range(n2)]),
                tuple([ob[n2 + i] for i in range(n2)]),
                tuple([ob[2 * n2 + i] for i in range(n2)]),
            )
        finally:
            free(ob)
    finally:
        free(buf)
