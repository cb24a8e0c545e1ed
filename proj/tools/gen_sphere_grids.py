#!/usr/bin/env python3
# Copyright 2026 The Auralize Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the shipped spherical sampling-node tables.

For each order N in [0, 28] a set of L = (N+2)^2 unit vectors is produced
such that the equal-weight quadrature rule with weights 4*pi/L integrates
every real spherical harmonic of degree 1..N to (numerical) zero. Starting
point is a spherical Fibonacci spiral (low inter-node coherence); the
quadrature residual

    A_N(X) = sum_{1<=n<=N, |m|<=n} [ (4*pi/L) * sum_l Y_nm(x_l) ]^2

is then driven to ~1e-20 with L-BFGS-B using analytic gradients. Results are
written one JSON file per order into data/sphere_nodes/ and can be rendered
into src/sphere_tables.cpp with --emit.

Usage:
  python3 tools/gen_sphere_grids.py [--orders 0-28] [--emit]
"""

import argparse
import json
import os
import sys

import numpy as np
from scipy.optimize import minimize

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUT_DIR = os.path.join(ROOT, "data", "sphere_nodes")
CPP_PATH = os.path.join(ROOT, "src", "sphere_tables.cpp")

INV_SQRT_4PI = 0.28209479177387814


def sh_and_tangent_grad(order, U):
    """Real orthonormal SH (ACN, no Condon-Shortley) and surface gradients.

    U: (L,3) unit vectors. Returns Y (L,M) and G (L,M,3) with G tangent.
    """
    L = U.shape[0]
    M = (order + 1) ** 2
    t = U[:, 2]
    s = np.hypot(U[:, 0], U[:, 1])
    safe = s > 0
    cp = np.where(safe, np.divide(U[:, 0], s, out=np.ones_like(s), where=safe), 1.0)
    sp = np.where(safe, np.divide(U[:, 1], s, out=np.zeros_like(s), where=safe), 0.0)

    # Normalized Legendre tables P, dP/dtheta, and m*P/sin(theta).
    P = {}
    D = {}
    Q = {}
    P[(0, 0)] = np.full(L, INV_SQRT_4PI)
    D[(0, 0)] = np.zeros(L)
    for m in range(1, order + 1):
        f = np.sqrt((2.0 * m + 1.0) / (2.0 * m))
        P[(m, m)] = f * s * P[(m - 1, m - 1)]
        D[(m, m)] = f * (s * D[(m - 1, m - 1)] + t * P[(m - 1, m - 1)])
        if m == 1:
            Q[(1, 1)] = f * P[(0, 0)]
        else:
            Q[(m, m)] = f * s * Q[(m - 1, m - 1)]
    for m in range(0, order):
        g = np.sqrt(2.0 * m + 3.0)
        P[(m + 1, m)] = g * t * P[(m, m)]
        D[(m + 1, m)] = g * (t * D[(m, m)] - s * P[(m, m)])
        if m >= 1:
            Q[(m + 1, m)] = g * t * Q[(m, m)]
    for m in range(0, order + 1):
        for n in range(m + 2, order + 1):
            a = np.sqrt((4.0 * n * n - 1.0) / (n * n - m * m))
            b = np.sqrt(((n - 1.0) ** 2 - m * m) / (4.0 * (n - 1.0) ** 2 - 1.0))
            P[(n, m)] = a * (t * P[(n - 1, m)] - b * P[(n - 2, m)])
            D[(n, m)] = a * (t * D[(n - 1, m)] - s * P[(n - 1, m)] - b * D[(n - 2, m)])
            if m >= 1:
                Q[(n, m)] = a * (t * Q[(n - 1, m)] - b * Q[(n - 2, m)])

    cm = [np.ones(L)]
    sm = [np.zeros(L)]
    for m in range(1, order + 1):
        cm.append(cm[m - 1] * cp - sm[m - 1] * sp)
        sm.append(sm[m - 1] * cp + cm[m - 1] * sp)

    theta_hat = np.stack([t * cp, t * sp, -s], axis=1)
    phi_hat = np.stack([-sp, cp, np.zeros(L)], axis=1)

    Y = np.zeros((L, M))
    G = np.zeros((L, M, 3))
    sqrt2 = np.sqrt(2.0)
    for n in range(order + 1):
        acn0 = n * n + n
        Y[:, acn0] = P[(n, 0)]
        G[:, acn0, :] = D[(n, 0)][:, None] * theta_hat
        for m in range(1, n + 1):
            p = sqrt2 * P[(n, m)]
            dth = sqrt2 * D[(n, m)]
            q = sqrt2 * m * Q[(n, m)]
            Y[:, acn0 + m] = p * cm[m]
            Y[:, acn0 - m] = p * sm[m]
            G[:, acn0 + m, :] = (dth * cm[m])[:, None] * theta_hat - (q * sm[m])[:, None] * phi_hat
            G[:, acn0 - m, :] = (dth * sm[m])[:, None] * theta_hat + (q * cm[m])[:, None] * phi_hat
    return Y, G


def fibonacci_sphere(count):
    i = np.arange(count)
    z = 1.0 - (2.0 * i + 1.0) / count
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = np.pi * (3.0 - np.sqrt(5.0)) * i
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def design_residual(order, U):
    Y, _ = sh_and_tangent_grad(order, U)
    c = 4.0 * np.pi / U.shape[0]
    return c * Y[:, 1:].sum(axis=0)


def optimize_order(order, seed=0, max_restarts=6):
    L = (order + 2) ** 2
    if order == 0:
        return fibonacci_sphere(L), 0.0

    def cost_grad(x):
        X = x.reshape(L, 3)
        r = np.linalg.norm(X, axis=1, keepdims=True)
        U = X / r
        Y, G = sh_and_tangent_grad(order, U)
        c = 4.0 * np.pi / L
        resid = c * Y[:, 1:].sum(axis=0)
        A = float(resid @ resid)
        gU = 2.0 * c * np.einsum("m,lmk->lk", resid, G[:, 1:, :])
        return A, (gU / r).ravel()

    rng = np.random.default_rng(seed)
    best_X, best_A = None, np.inf
    X0 = fibonacci_sphere(L)
    for attempt in range(max_restarts):
        x0 = X0.ravel().copy()
        if attempt > 0:
            x0 = x0 + rng.normal(scale=0.02 * attempt, size=x0.shape)
        res = minimize(cost_grad, x0, jac=True, method="L-BFGS-B",
                       options=dict(maxiter=200000, maxfun=400000,
                                    ftol=0.0, gtol=1e-14, maxls=60))
        A = res.fun
        if A < best_A:
            best_A = A
            best_X = res.x.reshape(L, 3)
        if best_A < 1e-19:
            break
    U = best_X / np.linalg.norm(best_X, axis=1, keepdims=True)
    return U, best_A


def min_pairwise_distance(U):
    d = np.inf
    for i in range(U.shape[0]):
        diff = U[i + 1:] - U[i]
        if diff.size:
            d = min(d, float(np.sqrt((diff * diff).sum(axis=1)).min()))
    return d


def emit_cpp(orders):
    tables = []
    for order in orders:
        L = (order + 2) ** 2
        path = os.path.join(OUT_DIR, f"order{order:02d}_L{L}.json")
        if not os.path.exists(path):
            print(f"emit: skipping order {order} (no data)", file=sys.stderr)
            continue
        with open(path) as f:
            tables.append(json.load(f))
    lines = []
    lines.append("""/*
Copyright 2026 The Auralize Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Generated by tools/gen_sphere_grids.py. Do not edit by hand.
//
// Unit node directions for the spherical surface grids. Each table with
// L = (N+2)^2 nodes integrates all real spherical harmonics of degree 1..N
// exactly (to numerical precision) with equal weights 4*pi/L.

#include "aural/sphere_tables.hpp"

namespace aural {
namespace {
""")
    for tb in tables:
        order = tb["order"]
        L = tb["count"]
        xyz = tb["xyz"]
        lines.append(f"const double kNodesL{L}[] = {{")
        for i in range(L):
            x, y, z = xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]
            lines.append(f"    {x:.17g}, {y:.17g}, {z:.17g},")
        lines.append("};\n")
    lines.append("const SphereTable kTables[] = {")
    for tb in tables:
        lines.append(f"    {{{tb['count']}, {tb['order']}, kNodesL{tb['count']}}},")
    lines.append("};\n")
    lines.append("}  // namespace\n")
    lines.append("""const SphereTable* find_sphere_table(int node_count) {
  for (const auto& t : kTables)
    if (t.count == node_count) return &t;
  return nullptr;
}

std::vector<int> sphere_table_counts() {
  std::vector<int> counts;
  for (const auto& t : kTables) counts.push_back(t.count);
  return counts;
}

}  // namespace aural
""")
    with open(CPP_PATH, "w") as f:
        f.write("\n".join(lines))
    print(f"emitted {CPP_PATH} with {len(tables)} tables")


def parse_orders(spec):
    out = []
    for part in spec.split(","):
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return sorted(set(out))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", default="0-28")
    ap.add_argument("--emit", action="store_true", help="render src/sphere_tables.cpp")
    args = ap.parse_args()
    orders = parse_orders(args.orders)

    os.makedirs(OUT_DIR, exist_ok=True)
    if not args.emit:
        for order in orders:
            L = (order + 2) ** 2
            path = os.path.join(OUT_DIR, f"order{order:02d}_L{L}.json")
            if os.path.exists(path):
                print(f"order {order}: exists, skipping")
                continue
            U, A = optimize_order(order)
            resid = design_residual(order, U) if order > 0 else np.zeros(0)
            rmax = float(np.abs(resid).max()) if resid.size else 0.0
            dmin = min_pairwise_distance(U)
            print(f"order {order}: L={L} A={A:.3e} max|resid|={rmax:.3e} "
                  f"min_dist={dmin:.4f}")
            if rmax > 1e-7:
                print(f"order {order}: WARNING residual above target", file=sys.stderr)
            with open(path, "w") as f:
                json.dump({"order": order, "count": L,
                           "max_residual": rmax,
                           "xyz": [float(v) for v in U.ravel()]}, f)
    else:
        emit_cpp(orders)


if __name__ == "__main__":
    main()
