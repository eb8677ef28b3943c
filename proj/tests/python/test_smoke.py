import numpy as np
import pytest

import qmedshield as qms


SEED = bytes(range(32))


def gradient(w=64, h=64):
    x = np.arange(w, dtype=np.uint16)
    y = np.arange(h, dtype=np.uint16)
    return ((y[:, None] + x[None, :]) % 256).astype(np.uint8)


def test_keyset_generate_is_deterministic():
    a = qms.KeySet.generate(SEED)
    b = qms.KeySet.generate(SEED)
    assert a == b
    assert a.fingerprint() == b.fingerprint()
    assert qms.KeySet.generate(bytes(32)) != a


def test_keyset_text_round_trip():
    key = qms.KeySet.generate(SEED)
    parsed = qms.KeySet.from_text(key.to_text())
    assert parsed == key
    with pytest.raises(ValueError):
        qms.KeySet.from_text("version = 1\nk1 = nope\n")
    with pytest.raises(ValueError):
        qms.KeySet.generate(b"short")


def test_encrypt_decrypt_round_trip():
    rng = np.random.default_rng(7)
    img = rng.integers(0, 256, size=(63, 65), dtype=np.uint8)
    key = qms.KeySet.generate(SEED)
    cipher = qms.encrypt(img, key)
    assert cipher.shape == img.shape
    assert cipher.dtype == np.uint8
    assert not np.array_equal(cipher, img)
    assert np.array_equal(qms.decrypt(cipher, key), img)


def test_encrypted_image_statistics():
    img = gradient(256, 256)
    key = qms.KeySet.generate(SEED)
    cipher = qms.encrypt(img, key)
    assert qms.entropy(cipher) > 7.99
    stat, ok = qms.chi_square(cipher)
    assert stat >= 0.0
    assert abs(qms.correlation(cipher, "horizontal")) < 0.05
    assert qms.correlation(img, "horizontal") > 0.9


def test_metrics_basics():
    img = gradient()
    assert qms.npcr(img, img) == 0.0
    assert qms.uaci(img, img) == 0.0
    flipped = 255 - img
    assert qms.npcr(img, flipped) > 99.0
    mae, rmse, psnr = qms.error_metrics(img, img)
    assert mae == 0.0 and rmse == 0.0 and np.isinf(psnr)


def test_shape_validation():
    key = qms.KeySet.generate(SEED)
    with pytest.raises(ValueError):
        qms.encrypt(np.zeros((4, 4, 3), dtype=np.uint8), key)
    with pytest.raises(ValueError):
        qms.npcr(gradient(8, 8), gradient(9, 9))


def test_analyze_json_reports_measured_values():
    import json

    img = gradient()
    key = qms.KeySet.generate(SEED)
    cipher = qms.encrypt(img, key)
    report = json.loads(qms.analyze_json(img, cipher, key))
    assert report["schema"] == "qmedshield-report/1"
    assert report["image"] == {"width": 64, "height": 64}
    assert len(report["histogram"]["cipher"]) == 256
    assert report["entropy"]["cipher"] > 7.0
    assert 0.0 <= report["differential"]["npcr_percent"] <= 100.0
    assert report["key_sensitivity"]["npcr_percent"] >= 0.0


def test_chaotic_sequence_generators():
    h = qms.henon_sequence(0.1, 0.1, n=16, burn_in=0)
    assert h.shape == (16, 2)
    assert abs(h[0, 0] - 1.086) < 1e-12

    s = qms.hybrid_sequence(0.5, 1.0, burn_in=0, n=8)
    assert s.shape == (8,)
    assert np.all((s >= 0) & (s < 1))

    q = qms.quantum_logistic_sequence(n=32, burn_in=0)
    assert q.shape == (32, 3)
    assert abs(q[0, 0] - 0.8) < 1e-12

    with pytest.raises(ArithmeticError):
        qms.henon_sequence(0.5, 0.95, burn_in=0, n=100000)
