# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython rewriting kernel; semantics identical to _nf_py.

The hot loop (redex scan, memo lookups, term accumulation) runs with C
integer indexing; coefficients remain generic Python ring elements.
"""


class BudgetExceeded(RuntimeError):
    """Raised when reduction exceeds its step budget (malformed rule set)."""


def nf_word(tuple w0, dict rules, Py_ssize_t ngens, object one, dict memo,
            long long budget):
    cdef list stack
    cdef tuple w, pre, post, rw, child
    cdef Py_ssize_t i, n, red
    cdef long long steps = 0
    cdef object hit, rhs, rc, sc, sw, v, prev
    cdef dict acc

    hit = memo.get(w0)
    if hit is not None:
        return hit
    stack = [w0]
    while stack:
        # wraparound is disabled; index the tail explicitly
        w = <tuple>stack[len(stack) - 1]
        if w in memo:
            stack.pop()
            continue
        red = -1
        n = len(w) - 1
        for i in range(n):
            if (<object>w[i]) * ngens + (<object>w[i + 1]) in rules:
                red = i
                break
        if red < 0:
            memo[w] = ((w, one),)
            stack.pop()
            continue
        rhs = rules[(<object>w[red]) * ngens + (<object>w[red + 1])]
        pre = w[:red]
        post = w[red + 2:]
        pending = None
        for rw, _rc in rhs:
            child = pre + rw + post
            if child not in memo:
                if pending is None:
                    pending = []
                pending.append(child)
        if pending is not None:
            steps += len(<list>pending)
            if steps > budget:
                raise BudgetExceeded("rewrite budget exceeded at %r" % (w,))
            stack.extend(pending)
            continue
        acc = {}
        for rw, rc in rhs:
            child = pre + rw + post
            for sw, sc in memo[child]:
                prev = acc.get(sw)
                if prev is None:
                    v = rc * sc
                else:
                    v = prev + rc * sc
                if v:
                    acc[sw] = v
                elif prev is not None:
                    del acc[sw]
        memo[w] = tuple(acc.items())
        stack.pop()
        steps += 1
        if steps > budget:
            raise BudgetExceeded("rewrite budget exceeded at %r" % (w,))
    return memo[w0]


def normal_form_terms(terms, dict rules, Py_ssize_t ngens, object one,
                      dict memo, long long budget):
    cdef dict out = {}
    cdef object w, c, sw, sc, v, prev
    items = terms.items() if isinstance(terms, dict) else terms
    for w, c in items:
        if not c:
            continue
        for sw, sc in nf_word(<tuple>w, rules, ngens, one, memo, budget):
            prev = out.get(sw)
            if prev is None:
                v = c * sc
            else:
                v = prev + c * sc
            if v:
                out[sw] = v
            elif prev is not None:
                del out[sw]
    return out
