import numpy as np

from navtune import autodiff as ad


def numeric_grad(f, x: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    """Central finite differences of a scalar function of one array."""
    g = np.zeros_like(x)
    flat = x.ravel()
    gf = g.ravel()
    for i in range(flat.size):
        orig = flat[i]
        flat[i] = orig + eps
        hi = f(x)
        flat[i] = orig - eps
        lo = f(x)
        flat[i] = orig
        gf[i] = (hi - lo) / (2 * eps)
    return g


def check_unary(op, f_np, x, atol=1e-7):
    t = ad.Tensor(x.copy(), requires_grad=True)
    out = ad.tsum(op(t))
    out.backward()
    num = numeric_grad(lambda a: f_np(a).sum(), x.copy())
    np.testing.assert_allclose(t.grad, num, rtol=1e-5, atol=atol)


def test_elementwise_ops():
    rng = np.random.default_rng(0)
    x = rng.normal(size=(4, 5))
    check_unary(ad.relu, lambda a: np.maximum(a, 0), x + 0.01)
    check_unary(ad.tanh, np.tanh, x)
    check_unary(ad.sigmoid, lambda a: 1 / (1 + np.exp(-a)), x)
    check_unary(ad.exp, np.exp, x)
    check_unary(ad.square, np.square, x)
    check_unary(ad.tabs, np.abs, x + 0.01)
    check_unary(ad.log, np.log, np.abs(x) + 0.5)
    check_unary(ad.sqrt, np.sqrt, np.abs(x) + 0.5)


def test_binary_broadcasting():
    rng = np.random.default_rng(1)
    a = ad.Tensor(rng.normal(size=(3, 4)), requires_grad=True)
    b = ad.Tensor(rng.normal(size=(4,)), requires_grad=True)
    out = ad.tsum(ad.mul(ad.add(a, b), ad.sub(a, 2.0)))
    out.backward()
    num_a = numeric_grad(lambda x: ((x + b.data) * (x - 2.0)).sum(), a.data.copy())
    num_b = numeric_grad(lambda x: ((a.data + x) * (a.data - 2.0)).sum(), b.data.copy())
    np.testing.assert_allclose(a.grad, num_a, rtol=1e-6, atol=1e-8)
    np.testing.assert_allclose(b.grad, num_b, rtol=1e-6, atol=1e-8)


def test_matmul_batched():
    rng = np.random.default_rng(2)
    a = ad.Tensor(rng.normal(size=(2, 3, 4)), requires_grad=True)
    b = ad.Tensor(rng.normal(size=(4, 5)), requires_grad=True)
    out = ad.tsum(ad.square(ad.matmul(a, b)))
    out.backward()
    num_a = numeric_grad(lambda x: np.square(x @ b.data).sum(), a.data.copy())
    num_b = numeric_grad(lambda x: np.square(a.data @ x).sum(), b.data.copy())
    np.testing.assert_allclose(a.grad, num_a, rtol=1e-5, atol=1e-7)
    np.testing.assert_allclose(b.grad, num_b, rtol=1e-5, atol=1e-7)


def test_min_reduce_routes_to_argmin():
    x = ad.Tensor(np.array([[3.0, 1.0, 2.0], [0.5, 4.0, 0.7]]), requires_grad=True)
    out = ad.tsum(ad.tmin(x, axis=1))
    out.backward()
    expected = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
    np.testing.assert_array_equal(x.grad, expected)


def test_atan2_gradient():
    rng = np.random.default_rng(3)
    y = rng.normal(size=6) + 2.0
    x = rng.normal(size=6) + 2.0
    ty = ad.Tensor(y.copy(), requires_grad=True)
    tx = ad.Tensor(x.copy(), requires_grad=True)
    out = ad.tsum(ad.square(ad.atan2(ty, tx)))
    out.backward()
    num_y = numeric_grad(lambda a: np.square(np.arctan2(a, x)).sum(), y.copy())
    num_x = numeric_grad(lambda a: np.square(np.arctan2(y, a)).sum(), x.copy())
    np.testing.assert_allclose(ty.grad, num_y, rtol=1e-6, atol=1e-8)
    np.testing.assert_allclose(tx.grad, num_x, rtol=1e-6, atol=1e-8)


def test_masked_softmax_excludes_masked_exactly():
    logits = np.array([[1.0, 2.0, 3.0, 4.0]])
    mask = np.array([[True, True, False, True]])
    out = ad.masked_softmax(ad.Tensor(logits), mask)
    assert out.data[0, 2] == 0.0
    np.testing.assert_allclose(out.data.sum(), 1.0, atol=1e-15)
    # changing the masked logit must not change anything, bit for bit
    logits2 = logits.copy()
    logits2[0, 2] = 1e9
    out2 = ad.masked_softmax(ad.Tensor(logits2), mask)
    assert (out.data == out2.data).all()


def test_masked_softmax_gradient():
    rng = np.random.default_rng(4)
    x = rng.normal(size=(2, 5))
    mask = np.array([[1, 1, 0, 1, 1], [1, 0, 1, 1, 0]], dtype=bool)
    w = rng.normal(size=(2, 5))

    def f(a):
        neg = np.where(mask, a, -np.inf)
        m = np.max(neg, axis=-1, keepdims=True)
        e = np.exp(neg - m)
        return (w * e / e.sum(axis=-1, keepdims=True)).sum()

    t = ad.Tensor(x.copy(), requires_grad=True)
    out = ad.tsum(ad.mul(ad.masked_softmax(t, mask), w))
    out.backward()
    num = numeric_grad(f, x.copy())
    np.testing.assert_allclose(t.grad, num, rtol=1e-6, atol=1e-8)


def test_layer_norm_gradient():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(3, 4, 6))
    gamma = rng.normal(size=6)
    beta = rng.normal(size=6)
    eps = 1e-5

    def f_np(a, g, b):
        mu = a.mean(-1, keepdims=True)
        var = a.var(-1, keepdims=True)
        return (((a - mu) / np.sqrt(var + eps)) * g + b)

    tx = ad.Tensor(x.copy(), requires_grad=True)
    tg = ad.Tensor(gamma.copy(), requires_grad=True)
    tb = ad.Tensor(beta.copy(), requires_grad=True)
    out = ad.tsum(ad.square(ad.layer_norm(tx, tg, tb, eps)))
    out.backward()
    num_x = numeric_grad(lambda a: np.square(f_np(a, gamma, beta)).sum(), x.copy())
    num_g = numeric_grad(lambda a: np.square(f_np(x, a, beta)).sum(), gamma.copy())
    num_b = numeric_grad(lambda a: np.square(f_np(x, gamma, a)).sum(), beta.copy())
    np.testing.assert_allclose(tx.grad, num_x, rtol=1e-5, atol=1e-7)
    np.testing.assert_allclose(tg.grad, num_g, rtol=1e-5, atol=1e-7)
    np.testing.assert_allclose(tb.grad, num_b, rtol=1e-5, atol=1e-7)


def test_getitem_concat_reshape_transpose():
    rng = np.random.default_rng(6)
    x = rng.normal(size=(4, 6))
    t = ad.Tensor(x.copy(), requires_grad=True)
    a = t[:, :3]
    b = t[:, 3:]
    joined = ad.concat([b, a], axis=-1)
    moved = ad.transpose(ad.reshape(joined, (2, 2, 6)), (1, 0, 2))
    out = ad.tsum(ad.square(moved))
    out.backward()
    num = numeric_grad(lambda a_: np.square(a_).sum(), x.copy())
    np.testing.assert_allclose(t.grad, num, rtol=1e-6, atol=1e-8)


def test_wrap_angle_values():
    x = ad.Tensor(np.array([0.0, 3.2, -3.2, 7.0]), requires_grad=True)
    out = ad.wrap_angle(x)
    np.testing.assert_allclose(
        out.data, [0.0, 3.2 - 2 * np.pi, 2 * np.pi - 3.2, 7.0 - 2 * np.pi]
    )
    ad.tsum(out).backward()
    np.testing.assert_array_equal(x.grad, np.ones(4))


def test_grad_accumulates_over_reuse():
    x = ad.Tensor(np.array([2.0]), requires_grad=True)
    y = ad.mul(x, x)  # x reused
    z = ad.add(y, x)
    z.backward()
    np.testing.assert_allclose(x.grad, [5.0])  # 2x + 1
