#!/usr/bin/env python3
"""Independent modular-arithmetic oracle for the F1/F2 golden vectors.

Recomputes every fixture value from first principles (plain integer
arithmetic mod q, extended-Euclid inverses) with no dependency on the
C++ implementation.  Run from anywhere; writes the golden vector files
next to this script under ../golden/.

    python3 tests/oracle/fixture_oracle.py

The main build must reproduce these files byte for byte.
"""

import json
import pathlib
import sys

Q = 101
SUITE = f"mock{Q}"
DIGEST = "sha256"


def egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = egcd(b, a % b)
    return g, y, x - (a // b) * y


def inv(a, q=Q):
    a %= q
    if a == 0:
        raise ValueError("zero has no inverse")
    g, x, _ = egcd(a, q)
    if g != 1:
        raise ValueError("not invertible")
    return x % q


def g1(e):
    return f"{SUITE}:G1:{e % Q}"


def gt(e):
    return f"{SUITE}:GT:{e % Q}"


def check(name, lhs, rhs):
    if lhs != rhs:
        raise AssertionError(f"{name}: {lhs} != {rhs}")


def fixture_f1():
    # Pinned hash outputs and fixture scalars.
    y = 7              # KGC master secret
    h_signer = 11      # H(ID of "alice")
    h_target = 22      # H(ID of "bob")
    m_bar = 9          # MSG hash of "message-1"
    r_s, x_s, c_s, t = 3, 2, 5, 4

    # Setup: Y_KGC = g1^y, g2 = e(g1,g1)^y.
    y_kgc = y
    g2 = y

    # Partial key: R_S = g1^r, y_S = g1^(y*h/(h+r+y)).
    denom = (h_signer + r_s + y) % Q
    y_s = y * h_signer % Q * inv(denom) % Q

    # Genuineness (eq. between e(g1,Y_KGC)^h and e(y_S, g1^h * R_S * Y_KGC)).
    eq1_lhs = y_kgc * h_signer % Q
    eq1_rhs = y_s * denom % Q
    check("F1 partial key relation", eq1_lhs, eq1_rhs)

    # Public key: Y_S1 = y_S^(1/x), Y_S2 = g2^c.
    y_s1 = y_s * inv(x_s) % Q
    y_s2 = g2 * c_s % Q

    # Sign: sigma1 = g2^t, sigma2 = (g1^h * R_S * Y_KGC)^((c/m - t) x).
    sigma1 = g2 * t % Q
    sigma2 = denom * ((c_s * inv(m_bar) - t) % Q) % Q * x_s % Q

    # Verify: (Y_S2^(1/m) / sigma1)^h == e(Y_S1, sigma2).
    ver_lhs = (y_s2 * inv(m_bar) - sigma1) % Q * h_signer % Q
    ver_rhs = y_s1 * sigma2 % Q
    check("F1 verification", ver_lhs, ver_rhs)

    # Partial-key mauling: alpha = h'/h, y' = y_S^alpha,
    # R' = R_S / g1^((alpha-1) h).
    alpha = h_target * inv(h_signer) % Q
    y_f = y_s * alpha % Q
    r_f = (r_s - (alpha - 1) * h_signer) % Q
    denom_f = (h_target + r_f + y) % Q
    aeq_lhs = y_kgc * h_target % Q
    aeq_rhs = y_f * denom_f % Q
    check("F1 forged partial key relation", aeq_lhs, aeq_rhs)

    # Full forged key pair and signature on the same message.
    fx, fc, ft = 3, 8, 6
    fy1 = y_f * inv(fx) % Q
    fy2 = g2 * fc % Q
    fsigma1 = g2 * ft % Q
    fsigma2 = denom_f * ((fc * inv(m_bar) - ft) % Q) % Q * fx % Q
    fver_lhs = (fy2 * inv(m_bar) - fsigma1) % Q * h_target % Q
    fver_rhs = fy1 * fsigma2 % Q
    check("F1 forged verification", fver_lhs, fver_rhs)

    return {
        "fixture": "F1",
        "scheme": "karati",
        "q": Q,
        "suite": SUITE,
        "digest": DIGEST,
        "identities": {"signer": "alice", "target": "bob"},
        "message": "message-1",
        "pinned_hashes": {"h_signer": h_signer, "h_target": h_target, "m_bar": m_bar},
        "master_secret_y": y,
        "scalars": {"r_S": r_s, "x_S": x_s, "c_S": c_s, "t": t, "m_bar": m_bar},
        "elements": {
            "Y_KGC": g1(y_kgc),
            "g2": gt(g2),
            "y_S": g1(y_s),
            "R_S": g1(r_s),
            "eq1_lhs": gt(eq1_lhs),
            "eq1_rhs": gt(eq1_rhs),
            "Y_S1": g1(y_s1),
            "Y_S2": gt(y_s2),
            "sigma1": gt(sigma1),
            "sigma2": g1(sigma2),
            "verify_lhs": gt(ver_lhs),
            "verify_rhs": gt(ver_rhs),
        },
        "verify": "VALID",
        "attack": {
            "target_id": "bob",
            "alpha": alpha,
            "forged_partial_y": g1(y_f),
            "forged_partial_R": g1(r_f),
            "eq1_lhs": gt(aeq_lhs),
            "eq1_rhs": gt(aeq_rhs),
            "forged_scalars": {"x": fx, "c": fc, "t": ft},
            "forged_public_Y1": g1(fy1),
            "forged_public_Y2": gt(fy2),
            "forged_sigma1": gt(fsigma1),
            "forged_sigma2": g1(fsigma2),
            "forged_verify": "VALID",
        },
    }


def fixture_f2():
    # Pinned hash outputs and fixture scalars.
    alpha = 7          # KGC master secret
    q_id = 13          # H1(ID of "alice")
    w = 9              # H2("delta-1")
    h_sign = 6         # H3(message-1, alice, Y_S, R=4P)
    h_forged = 2       # H3(message-2, alice, Y_S, R=4P)
    h_type2 = 8        # H3(message-1, alice, Y_S, R=10P)
    x_s, r = 5, 4
    r2 = 10

    # Setup / keys (additive notation; exponents of P).
    p_pub = alpha
    d_s = alpha * q_id % Q
    y_s = x_s

    # Sign: R = rP, V = D_S + r W + h x P_pub.
    big_r = r
    v = (d_s + r * w + h_sign * x_s * p_pub) % Q

    # Verify: e(V,P) == e(Q + h Y_S, P_pub) e(R, W).
    ver_lhs = v
    ver_rhs = ((q_id + h_sign * y_s) * p_pub + big_r * w) % Q
    check("F2 verification", ver_lhs, ver_rhs)

    # Type-1 forgery: D_{S,delta} = V - x h P_pub, V' = D_{S,delta} + h' x P_pub.
    d_delta = (v - x_s * h_sign * p_pub) % Q
    check("F2 delta key relation", d_delta, (d_s + r * w) % Q)
    v_forged = (d_delta + h_forged * x_s * p_pub) % Q
    t1_rhs = ((q_id + h_forged * y_s) * p_pub + big_r * w) % Q
    check("F2 type-1 forged verification", v_forged, t1_rhs)

    # Type-2 forgery: fresh r, V = D_S + r W + h alpha Y_S.
    big_r2 = r2
    v2 = (d_s + r2 * w + h_type2 * alpha * y_s) % Q
    t2_rhs = ((q_id + h_type2 * y_s) * p_pub + big_r2 * w) % Q
    check("F2 type-2 forged verification", v2, t2_rhs)

    return {
        "fixture": "F2",
        "scheme": "kumar",
        "q": Q,
        "suite": SUITE,
        "digest": DIGEST,
        "identities": {"signer": "alice"},
        "delta": "delta-1",
        "message": "message-1",
        "pinned_hashes": {
            "q_id": q_id,
            "w": w,
            "h_sign": h_sign,
            "h_forged": h_forged,
            "h_type2": h_type2,
        },
        "master_secret_alpha": alpha,
        "scalars": {"x_S": x_s, "r": r},
        "elements": {
            "P_pub": g1(p_pub),
            "Q_ID": g1(q_id),
            "D_S": g1(d_s),
            "Y_S": g1(y_s),
            "W": g1(w),
            "R": g1(big_r),
            "V": g1(v),
            "verify_lhs": gt(ver_lhs),
            "verify_rhs": gt(ver_rhs),
        },
        "verify": "VALID",
        "attack_type1": {
            "message_forged": "message-2",
            "h_forged": h_forged,
            "D_S_delta": g1(d_delta),
            "R": g1(big_r),
            "V_forged": g1(v_forged),
            "verify": "VALID",
        },
        "attack_type2": {
            "r": r2,
            "h": h_type2,
            "R": g1(big_r2),
            "V": g1(v2),
            "verify": "VALID",
        },
    }


def main():
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "golden"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, vec in (("fixture_f1.json", fixture_f1()), ("fixture_f2.json", fixture_f2())):
        path = out_dir / name
        path.write_text(json.dumps(vec, indent=2, sort_keys=True) + "\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
