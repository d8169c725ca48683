#include "locc/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace locc::poly {

namespace {

constexpr double kTol = 1e-9;

// Solve the dim x dim system A y = b; returns false if singular.
bool solve_square(int dim, std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& y) {
    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        for (int r = col + 1; r < dim; ++r) {
            if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
        }
        if (std::abs(A[pivot][col]) < 1e-12) return false;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < dim; ++r) {
            double f = A[r][col] / A[col][col];
            for (int c = col; c < dim; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    y.assign(dim, 0.0);
    for (int r = dim - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < dim; ++c) s -= A[r][c] * y[c];
        y[r] = s / A[r][r];
    }
    return true;
}

bool satisfies_all(const std::vector<double>& y, const std::vector<HalfSpace>& hs) {
    for (const auto& h : hs) {
        double v = std::inner_product(h.a.begin(), h.a.end(), y.begin(), 0.0);
        if (v > h.b + kTol) return false;
    }
    return true;
}

std::vector<std::vector<double>> enumerate_vertices(int dim,
                                                    const std::vector<HalfSpace>& hs) {
    std::vector<std::vector<double>> verts;
    int m = static_cast<int>(hs.size());
    std::vector<int> idx(dim);
    // All dim-subsets of constraints.
    std::vector<int> comb(dim);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<std::vector<double>> A(dim);
        std::vector<double> b(dim);
        for (int i = 0; i < dim; ++i) {
            A[i] = hs[comb[i]].a;
            b[i] = hs[comb[i]].b;
        }
        std::vector<double> y;
        if (solve_square(dim, A, b, y) && satisfies_all(y, hs)) {
            bool dup = false;
            for (const auto& v : verts) {
                double d2 = 0.0;
                for (int i = 0; i < dim; ++i) d2 += (v[i] - y[i]) * (v[i] - y[i]);
                if (d2 < kTol * kTol) {
                    dup = true;
                    break;
                }
            }
            if (!dup) verts.push_back(y);
        }
        // next combination
        int i = dim - 1;
        while (i >= 0 && comb[i] == m - dim + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
    }
    return verts;
}

double polygon_area_2d(std::vector<std::vector<double>> pts) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    double area = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        area += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(area);
}

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double volume_3d(const std::vector<std::vector<double>>& verts,
                 const std::vector<HalfSpace>& hs) {
    Vec3 centroid{0, 0, 0};
    for (const auto& v : verts) {
        for (int i = 0; i < 3; ++i) centroid[i] += v[i];
    }
    for (int i = 0; i < 3; ++i) centroid[i] /= static_cast<double>(verts.size());

    // Facets lie on constraint planes; dedupe identical planes first.
    std::vector<std::pair<Vec3, double>> planes;
    for (const auto& h : hs) {
        Vec3 nv{h.a[0], h.a[1], h.a[2]};
        double nn = norm(nv);
        if (nn < 1e-14) continue;
        Vec3 u{nv[0] / nn, nv[1] / nn, nv[2] / nn};
        double off = h.b / nn;
        bool dup = false;
        for (const auto& p : planes) {
            if (std::abs(p.first[0] - u[0]) < 1e-9 && std::abs(p.first[1] - u[1]) < 1e-9 &&
                std::abs(p.first[2] - u[2]) < 1e-9 && std::abs(p.second - off) < 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) planes.emplace_back(u, off);
    }

    double vol = 0.0;
    for (const auto& [u, off] : planes) {
        std::vector<Vec3> face;
        for (const auto& v : verts) {
            Vec3 p{v[0], v[1], v[2]};
            if (std::abs(dot(u, p) - off) < 10 * kTol) face.push_back(p);
        }
        if (face.size() < 3) continue;
        Vec3 fc{0, 0, 0};
        for (const auto& p : face) {
            for (int i = 0; i < 3; ++i) fc[i] += p[i];
        }
        for (int i = 0; i < 3; ++i) fc[i] /= static_cast<double>(face.size());
        // In-plane basis for angular ordering.
        Vec3 e1 = sub(face[0], fc);
        double e1n = norm(e1);
        if (e1n < 1e-12) continue;
        for (int i = 0; i < 3; ++i) e1[i] /= e1n;
        Vec3 e2 = cross(u, e1);
        std::sort(face.begin(), face.end(), [&](const Vec3& a, const Vec3& b) {
            Vec3 da = sub(a, fc), db = sub(b, fc);
            return std::atan2(dot(da, e2), dot(da, e1)) <
                   std::atan2(dot(db, e2), dot(db, e1));
        });
        double area = 0.0;
        for (size_t i = 0; i < face.size(); ++i) {
            Vec3 da = sub(face[i], fc);
            Vec3 db = sub(face[(i + 1) % face.size()], fc);
            area += 0.5 * norm(cross(da, db));
        }
        double height = std::abs(dot(u, sub({centroid[0], centroid[1], centroid[2]},
                                            {face[0][0], face[0][1], face[0][2]})));
        vol += area * height / 3.0;
    }
    return vol;
}

}  // namespace

double halfspace_volume(int dim, const std::vector<HalfSpace>& hs) {
    auto verts = enumerate_vertices(dim, hs);
    if (static_cast<int>(verts.size()) < dim + 1) return 0.0;
    if (dim == 1) {
        double lo = verts[0][0], hi = verts[0][0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    if (dim == 2) return polygon_area_2d(verts);
    return volume_3d(verts, hs);
}

std::vector<HalfSpace> chamber_constraints(int d) {
    // Coordinates y = (x_1 .. x_{d-1}), x_d = 1 - sum y.
    int dim = d - 1;
    std::vector<HalfSpace> hs;
    // x_i >= x_{i+1}  for i = 1..d-2  ->  -y_i + y_{i+1} <= 0
    for (int i = 0; i + 1 < dim; ++i) {
        HalfSpace h{std::vector<double>(dim, 0.0), 0.0};
        h.a[i] = -1.0;
        h.a[i + 1] = 1.0;
        hs.push_back(h);
    }
    // x_{d-1} >= x_d  ->  -y_{d-1} + (1 - sum y) <= 0
    {
        HalfSpace h{std::vector<double>(dim, -1.0), -1.0};
        h.a[dim - 1] = -2.0;
        hs.push_back(h);
    }
    // x_d >= 0  ->  sum y <= 1
    hs.push_back(HalfSpace{std::vector<double>(dim, 1.0), 1.0});
    return hs;
}

std::vector<HalfSpace> majorization_constraints(const std::vector<double>& lambdaSorted,
                                                bool upper) {
    int d = static_cast<int>(lambdaSorted.size());
    int dim = d - 1;
    std::vector<HalfSpace> hs;
    double partial = 0.0;
    for (int k = 0; k < dim; ++k) {
        partial += lambdaSorted[static_cast<size_t>(k)];
        HalfSpace h{std::vector<double>(dim, 0.0), 0.0};
        for (int i = 0; i <= k; ++i) h.a[i] = upper ? 1.0 : -1.0;
        h.b = upper ? partial : -partial;
        hs.push_back(h);
    }
    return hs;
}

}  // namespace locc::poly
