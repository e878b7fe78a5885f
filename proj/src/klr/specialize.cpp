/*
   Copyright 2026 the heckelab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "klr/specialize.hpp"

#include "algebra/integral.hpp"
#include "algebra/specht.hpp"
#include "util/matrix.hpp"

namespace heckelab {

namespace {

long embed(long i, int e) { return e == 0 ? i : ((i % e) + e) % e; }

enum class Edge { Equal, Double, To, From, None };

Edge edge_of(long i, long j, int e) {
    auto eq = [&](long a, long b) { return ((a - b) % e + e) % e == 0; };
    if (eq(i, j)) return Edge::Equal;
    bool to = eq(j, i + 1), from = eq(i, j + 1);
    if (to && from) return Edge::Double;
    if (to) return Edge::To;
    if (from) return Edge::From;
    return Edge::None;
}

/// Per-shape specialised generator matrices over the residue field F.
template <class F>
struct ShapeAlgebra {
    int dim = 0;
    F zero, one;
    std::vector<std::vector<long>> residues;  // per basis tableau
    std::vector<Matrix<F>> psi;               // 1..n-1
    std::vector<Matrix<F>> y;                 // 1..n
    Matrix<F> e_mat(const std::vector<long>& i) const {
        Matrix<F> m(dim, dim, zero);
        for (int a = 0; a < dim; ++a)
            if (residues[(std::size_t)a] == i) m(a, a) = one;
        return m;
    }
};

template <class F>
void check_quiver_relations(const ShapeAlgebra<F>& A, const std::vector<long>& kappa, int e,
                            int n, const std::string& shape_name, VerificationReport& rep) {
    auto record = [&](const char* relation, json inst, const Matrix<F>& lhs,
                      const Matrix<F>& rhs) {
        inst["shape"] = shape_name;
        bool ok = lhs == rhs;
        rep.add(relation, std::move(inst), ok);
    };
    Matrix<F> zero(A.dim, A.dim, A.zero);
    Matrix<F> id = Matrix<F>::identity(A.dim, A.zero, A.one);

    // residue classes present in this cell module
    std::vector<std::vector<long>> classes;
    for (const auto& i : A.residues)
        if (std::find(classes.begin(), classes.end(), i) == classes.end())
            classes.push_back(i);

    {
        Matrix<F> sum = zero;
        for (const auto& i : classes) sum = sum + A.e_mat(i);
        record("quiver-e-complete", json{}, sum, id);
    }
    for (const auto& i : classes) {
        Matrix<F> ei = A.e_mat(i);
        // cyclotomic: y_1^{(Lambda,alpha_{i_1})} e(i) = 0
        int mult = 0;
        for (long kap : kappa)
            if (embed(kap, e) == embed(i[0], e)) ++mult;
        Matrix<F> pw = ei;
        for (int m = 0; m < mult; ++m) pw = A.y[0] * pw;
        record("quiver-cyclotomic", json{{"i", i}}, pw, zero);

        for (int r = 1; r < n; ++r) {
            json inst{{"i", i}, {"r", r}};
            auto j = i;
            std::swap(j[(std::size_t)r - 1], j[(std::size_t)r]);
            const Matrix<F>& P = A.psi[(std::size_t)r - 1];
            record("quiver-psi-e-intertwine", inst, P * ei, A.e_mat(j) * P);
            long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
            Matrix<F> delta = ir == ir1 ? ei : zero;
            record("quiver-psi-y-next", inst, P * A.y[(std::size_t)r] * ei,
                   A.y[(std::size_t)r - 1] * P * ei + delta);
            record("quiver-y-psi-next", inst, A.y[(std::size_t)r] * P * ei,
                   P * A.y[(std::size_t)r - 1] * ei + delta);
            // quadratic
            Matrix<F> expected = zero;
            switch (edge_of(ir, ir1, e)) {
                case Edge::Equal: break;
                case Edge::To:
                    expected = (A.y[(std::size_t)r - 1] - A.y[(std::size_t)r]) * ei;
                    break;
                case Edge::From:
                    expected = (A.y[(std::size_t)r] - A.y[(std::size_t)r - 1]) * ei;
                    break;
                case Edge::Double:
                    expected = (A.y[(std::size_t)r] - A.y[(std::size_t)r - 1]) *
                               (A.y[(std::size_t)r - 1] - A.y[(std::size_t)r]) * ei;
                    break;
                case Edge::None: expected = ei; break;
            }
            record("quiver-psi-square", inst, P * P * ei, expected);
        }
        for (int r = 1; r + 1 < n; ++r) {
            json inst{{"i", i}, {"r", r}};
            const Matrix<F>& P1 = A.psi[(std::size_t)r - 1];
            const Matrix<F>& P2 = A.psi[(std::size_t)r];
            Matrix<F> dev = (P1 * P2 * P1 - P2 * P1 * P2) * A.e_mat(i);
            long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r], ir2 = i[(std::size_t)r + 1];
            Matrix<F> expected = zero;
            if (embed(ir2 - ir, e) == 0) {
                switch (edge_of(ir, ir1, e)) {
                    case Edge::To: expected = zero - A.e_mat(i); break;
                    case Edge::From: expected = A.e_mat(i); break;
                    case Edge::Double:
                        expected = (A.y[(std::size_t)r - 1] - A.y[(std::size_t)r] -
                                    A.y[(std::size_t)r] + A.y[(std::size_t)r + 1]) *
                                   A.e_mat(i);
                        break;
                    default: break;
                }
            }
            record("quiver-braid", inst, dev, expected);
        }
    }
    for (int r = 1; r < n; ++r)
        for (int s = 1; s <= n; ++s) {
            if (s == r || s == r + 1) continue;
            record("quiver-psi-y-far", json{{"r", r}, {"s", s}},
                   A.psi[(std::size_t)r - 1] * A.y[(std::size_t)s - 1],
                   A.y[(std::size_t)s - 1] * A.psi[(std::size_t)r - 1]);
        }
    for (int r = 1; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
            record("quiver-psi-psi-far", json{{"r", r}, {"s", s}},
                   A.psi[(std::size_t)r - 1] * A.psi[(std::size_t)s - 1],
                   A.psi[(std::size_t)s - 1] * A.psi[(std::size_t)r - 1]);
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            record("quiver-yy-commute", json{{"r", r}, {"s", s}},
                   A.y[(std::size_t)r - 1] * A.y[(std::size_t)s - 1],
                   A.y[(std::size_t)s - 1] * A.y[(std::size_t)r - 1]);
}

/// psi-coordinate generator matrices over the scalar field, before
/// specialisation: G_psi = U G_f U^{-1}.
struct PsiCoords {
    bool ok = true;
    json failure;
    std::vector<Matrix<Scalar>> psi, y;
    std::vector<std::vector<long>> residues;
};

PsiCoords psi_coordinates(const System& sys, int shape) {
    const Universe& u = sys.U();
    PsiCoords out;
    int dim = u.num_tabs(shape), n = u.n();
    Scalar z = sys.zero(), one = sys.one();
    SpechtModule sp = specht_action(sys, shape);
    // rows: psi_t = e_{t^lam} * psi-word matrices (the image of y^lam f^lam
    // in the cell module is f_{t^lam})
    Matrix<Scalar> U(dim, dim, z);
    for (int t = 0; t < dim; ++t) {
        std::vector<Scalar> row((std::size_t)dim, z);
        row[0] = one;
        for (int r : u.perm({shape, t}).word) {
            std::vector<Scalar> next((std::size_t)dim, z);
            const Matrix<Scalar>& P = sp.psi_mat(r);
            for (int a = 0; a < dim; ++a) {
                if (row[(std::size_t)a].is_zero()) continue;
                for (int b = 0; b < dim; ++b)
                    if (!P(a, b).is_zero()) next[(std::size_t)b] += row[(std::size_t)a] * P(a, b);
            }
            row = std::move(next);
        }
        for (int b = 0; b < dim; ++b) U(t, b) = row[(std::size_t)b];
    }
    // U is unitriangular against the tableau order (more dominant = earlier)
    for (int t = 0; t < dim; ++t) {
        if (!U(t, t).is_one()) {
            out.ok = false;
            out.failure = json{{"reason", "psi change of basis not unitriangular"},
                               {"t", u.tab({shape, t}).str()}};
            return out;
        }
        for (int b = t + 1; b < dim; ++b)
            if (!U(t, b).is_zero()) {
                out.ok = false;
                out.failure = json{{"reason", "psi change of basis not triangular"},
                                   {"t", u.tab({shape, t}).str()}};
                return out;
            }
    }
    // forward substitution for U^{-1}
    Matrix<Scalar> V = Matrix<Scalar>::identity(dim, z, one);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < i; ++j) {
            if (U(i, j).is_zero()) continue;
            for (int k = 0; k <= j; ++k) V(i, k) -= U(i, j) * V(j, k);
        }
    auto conj = [&](const Matrix<Scalar>& G) { return U * G * V; };
    for (int r = 1; r < n; ++r) out.psi.push_back(conj(sp.psi_mat(r)));
    for (int r = 1; r <= n; ++r) out.y.push_back(conj(sp.y_mat(r)));
    for (int t = 0; t < dim; ++t) out.residues.push_back(u.residue_seq({shape, t}));
    return out;
}

}  // namespace

VerificationReport specialize_and_verify_klr(const System& sys, const TriangularBasis& psi) {
    VerificationReport rep;
    rep.suite = "klr-specialize";
    const Universe& u = sys.U();
    int n = u.n(), e = u.e();
    Mode mode = sys.mode();
    if (mode.tag != ModeTag::CycloLocal && mode.tag != ModeTag::DegenerateP)
        throw std::domain_error("specialize_and_verify_klr: cyclo or degenerate-p mode required");

    // ---- algebra level: relation deviations lie in m H(O) ----
    auto member = [&](const char* relation, json inst, const Element& deviation) {
        auto out = maximal_ideal_check(deviation, psi);
        rep.add(relation, std::move(inst), out.ok,
                out.ok ? json(nullptr)
                       : json{{"s", u.tab(out.witness->first.row()).str()},
                              {"t", u.tab(out.witness->first.col()).str()},
                              {"coefficient", out.witness->second.str()}});
    };
    const Element zero(&sys);
    for (const auto& [i, cls] : u.residue_classes()) {
        // y_1^{(Lambda,alpha_{i_1})} e(i) = 0 at the special point
        int mult = 0;
        for (long kap : u.kappa())
            if (embed(kap, e) == embed(i[0], e)) ++mult;
        Element pw = sys.gen_e(i);
        for (int m = 0; m < mult; ++m) pw = sys.gen_y(1) * pw;
        member("klr0-cyclotomic", json{{"i", i}}, pw);

        for (int r = 1; r < n; ++r) {
            json inst{{"i", i}, {"r", r}};
            const Element& ei = sys.gen_e(i);
            const Element& P = sys.gen_psi(r);
            long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
            Element expected(&sys);
            switch (edge_of(ir, ir1, e)) {
                case Edge::Equal: break;
                case Edge::To: expected = (sys.gen_y(r) - sys.gen_y(r + 1)) * ei; break;
                case Edge::From: expected = (sys.gen_y(r + 1) - sys.gen_y(r)) * ei; break;
                case Edge::Double:
                    expected = (sys.gen_y(r + 1) - sys.gen_y(r)) *
                               (sys.gen_y(r) - sys.gen_y(r + 1)) * ei;
                    break;
                case Edge::None: expected = ei; break;
            }
            member("klr0-psi-square", inst, P * P * ei - expected);
        }
        for (int r = 1; r + 1 < n; ++r) {
            json inst{{"i", i}, {"r", r}};
            const Element& P1 = sys.gen_psi(r);
            const Element& P2 = sys.gen_psi(r + 1);
            Element dev = (P1 * P2 * P1 - P2 * P1 * P2) * sys.gen_e(i);
            long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r], ir2 = i[(std::size_t)r + 1];
            Element expected(&sys);
            if (embed(ir2 - ir, e) == 0) {
                switch (edge_of(ir, ir1, e)) {
                    case Edge::To: expected = -sys.gen_e(i); break;
                    case Edge::From: expected = sys.gen_e(i); break;
                    case Edge::Double:
                        expected = (sys.gen_y(r) - sys.gen_y(r + 1) - sys.gen_y(r + 1) +
                                    sys.gen_y(r + 2)) *
                                   sys.gen_e(i);
                        break;
                    default: break;
                }
            }
            member("klr0-braid", inst, dev - expected);
        }
    }

    // ---- matrix level: per-shape specialised algebras ----
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        PsiCoords pc = psi_coordinates(sys, sh);
        std::string shape_name = u.shape(sh).str();
        if (!pc.ok) {
            rep.add("specialized-well-defined", json{{"shape", shape_name}}, false, pc.failure);
            continue;
        }
        bool regular = true;
        json w = nullptr;
        auto scan = [&](const Matrix<Scalar>& m, const char* gen, int idx) {
            for (int a = 0; a < m.rows() && regular; ++a)
                for (int b = 0; b < m.cols() && regular; ++b)
                    if (!m(a, b).is_zero() && m(a, b).local_class() == LocalClass::Pole) {
                        regular = false;
                        w = json{{"generator", gen}, {"index", idx},
                                 {"entry", m(a, b).str()}};
                    }
        };
        for (int r = 1; r < n; ++r) scan(pc.psi[(std::size_t)r - 1], "psi", r);
        for (int r = 1; r <= n; ++r) scan(pc.y[(std::size_t)r - 1], "y", r);
        rep.add("specialized-well-defined", json{{"shape", shape_name}}, regular, w);
        if (!regular) continue;

        int dim = (int)pc.residues.size();
        if (mode.tag == ModeTag::CycloLocal) {
            ShapeAlgebra<Cyclo> A;
            A.dim = dim;
            A.zero = Cyclo(mode.e, Rat(0));
            A.one = Cyclo(mode.e, Rat(1));
            A.residues = pc.residues;
            auto specialize = [&](const Matrix<Scalar>& m) {
                Matrix<Cyclo> out(dim, dim, A.zero);
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b)
                        if (!m(a, b).is_zero()) out(a, b) = m(a, b).value_x0_cyclo();
                return out;
            };
            for (const auto& m : pc.psi) A.psi.push_back(specialize(m));
            for (const auto& m : pc.y) A.y.push_back(specialize(m));
            check_quiver_relations(A, u.kappa(), e, n, shape_name, rep);
        } else {
            ShapeAlgebra<Fp> A;
            std::uint64_t p = (std::uint64_t)mode.e;
            A.dim = dim;
            A.zero = Fp(p, 0);
            A.one = Fp(p, 1);
            A.residues = pc.residues;
            auto specialize = [&](const Matrix<Scalar>& m) {
                Matrix<Fp> out(dim, dim, A.zero);
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b)
                        if (!m(a, b).is_zero()) out(a, b) = m(a, b).mod_p();
                return out;
            };
            for (const auto& m : pc.psi) A.psi.push_back(specialize(m));
            for (const auto& m : pc.y) A.y.push_back(specialize(m));
            check_quiver_relations(A, u.kappa(), e, n, shape_name, rep);
        }
    }
    return rep;
}

}  // namespace heckelab
