import numpy as np
from numba import jit


@jit(nopython=True, nogil=True, cache=True)
def smoothstep(u):  # pragma: no cover
    r"""

    smoothstep(u)

    Quintic smoothstep, clamped to :math:`[0, 1]`.

    .. math::

        S(u) =
            \begin{cases}
                0, & u \le 0 \\
                6u^5 - 15u^4 + 10u^3, & 0 < u < 1 \\
                1, & u \ge 1
            \end{cases}

    :math:`S` is :math:`C^2` with :math:`S'(0)=S'(1)=S''(0)=S''(1)=0`.

    Args:
        u (numpy.ndarray): array of floats

    Returns:
        numpy.ndarray: smoothstep of the clamped input
    """
    v = np.minimum(np.maximum(u, 0.0), 1.0)
    return v * v * v * (v * (6.0 * v - 15.0) + 10.0)


@jit(nopython=True, nogil=True, cache=True)
def smoothstep_slope(u):  # pragma: no cover
    r"""

    smoothstep_slope(u)

    Derivative :math:`S'(u) = 30u^2(1-u)^2` of :func:`smoothstep`, zero outside :math:`(0, 1)`.
    """
    v = np.minimum(np.maximum(u, 0.0), 1.0)
    return 30.0 * v * v * (1.0 - v) * (1.0 - v)


@jit(nopython=True, nogil=True, cache=True)
def central_difference(y, h):  # pragma: no cover
    r"""

    central_difference(y, h)

    Second order derivative estimate of uniformly sampled values: central differences
    in the interior, second order one-sided differences at both ends.

    Args:
        y (numpy.ndarray): samples, at least 3
        h (float): grid spacing

    Returns:
        numpy.ndarray: derivative estimate, same shape as ``y``
    """
    n = y.shape[0]
    out = np.empty(n)
    for i in range(1, n - 1):
        out[i] = (y[i + 1] - y[i - 1]) / (2.0 * h)
    out[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h)
    out[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h)
    return out


@jit(nopython=True, nogil=True, cache=True)
def cumulative_simpson(y, h):  # pragma: no cover
    r"""

    cumulative_simpson(y, h)

    Running integral :math:`F_i = \int_{x_0}^{x_i} y` of uniformly sampled values.

    Even nodes use composite Simpson from the previous even node; odd nodes add a
    three point partial-panel rule to the previous node,

    .. math::

        \int_{x_{i-1}}^{x_i} y \approx \frac{h}{12}\left(-y_{i-2} + 8y_{i-1} + 5y_i\right),

    and the first panel uses the mirrored rule :math:`\frac{h}{12}(5y_0 + 8y_1 - y_2)`.
    All nodes are third order accurate.

    Args:
        y (numpy.ndarray): samples, at least 3
        h (float): grid spacing

    Returns:
        numpy.ndarray: running integral, ``out[0] == 0``
    """
    n = y.shape[0]
    out = np.zeros(n)
    out[1] = h / 12.0 * (5.0 * y[0] + 8.0 * y[1] - y[2])
    for i in range(2, n):
        if i % 2 == 0:
            out[i] = out[i - 2] + h / 3.0 * (y[i - 2] + 4.0 * y[i - 1] + y[i])
        else:
            out[i] = out[i - 1] + h / 12.0 * (-y[i - 2] + 8.0 * y[i - 1] + 5.0 * y[i])
    return out


@jit(nopython=True, nogil=True, cache=True)
def window_averages(values, lo_index, window):  # pragma: no cover
    r"""

    window_averages(values, lo_index, window)

    Symmetric partial averages

    .. math::

        A(N) = \frac{1}{N}\sum_{i=-N}^{N} v_i, \qquad N = 1, \dots, W,

    of a sequence stored with degree ``i`` at position ``lo_index + i``.

    Args:
        values (numpy.ndarray): sequence values covering degrees :math:`-W..W`
        lo_index (int): array position of degree 0
        window (int): :math:`W`

    Returns:
        numpy.ndarray: ``out[N-1] == A(N)``
    """
    out = np.empty(window)
    total = values[lo_index]
    for N in range(1, window + 1):
        total += values[lo_index + N] + values[lo_index - N]
        out[N - 1] = total / N
    return out
