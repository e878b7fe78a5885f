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

#include "algebra/specht.hpp"

namespace heckelab {

SpechtModule specht_action(const System& sys, int shape) {
    const Universe& u = sys.U();
    SpechtModule m;
    m.sys = &sys;
    m.shape = shape;
    m.dim = u.num_tabs(shape);
    int n = u.n();
    Scalar z = sys.zero();
    bool with_psi = sys.mode().tag != ModeTag::GenericT;
    for (int r = 1; r < n; ++r) {
        Matrix<Scalar> Tm(m.dim, m.dim, z), Pm(m.dim, m.dim, z);
        for (int a = 0; a < m.dim; ++a) {
            TabRef t{shape, a};
            auto v = u.swapped(t, r);
            if (v) Tm(a, v->tab) = sys.coeff_T_right(t, r);
            Tm(a, a) = sys.diag_T_right(t, r);
            if (with_psi) {
                if (v) Pm(a, v->tab) = sys.coeff_psi_right(t, r);
                Pm(a, a) = sys.diag_psi_right(t, r);
            }
        }
        m.T.push_back(std::move(Tm));
        if (with_psi) m.psi.push_back(std::move(Pm));
    }
    for (int k = 1; k <= n; ++k) {
        Matrix<Scalar> Lm(m.dim, m.dim, z);
        for (int a = 0; a < m.dim; ++a) Lm(a, a) = sys.C({shape, a}, k);
        m.L.push_back(std::move(Lm));
        if (with_psi) {
            Matrix<Scalar> Ym(m.dim, m.dim, z);
            for (int a = 0; a < m.dim; ++a) Ym(a, a) = sys.y_eigen({shape, a}, k);
            m.y.push_back(std::move(Ym));
        }
    }
    return m;
}

}  // namespace heckelab
