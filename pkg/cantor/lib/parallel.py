"""Order-preserving parallel map over independent work items."""

from concurrent.futures import ThreadPoolExecutor


def ordered_map(func, items, threads=1):
    """Return ``[func(item) for item in items]``, computed on up to ``threads``
    worker threads.

    Results come back in input order whatever the scheduling, so callers that
    concatenate them produce identical output for every thread count. The
    numpy kernels used for rendering release the GIL, which is where the
    workers pay off.

    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(func, items))


def chunks(n, count):
    """Split ``range(n)`` into ``count`` contiguous ``(start, stop)`` blocks."""
    count = max(1, min(count, n))
    bounds = [n * k // count for k in range(count + 1)]
    return [
        (bounds[k], bounds[k + 1])
        for k in range(count)
        if bounds[k] < bounds[k + 1]
    ]
