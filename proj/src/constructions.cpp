#include "bflab/constructions.hpp"

#include <stdexcept>

namespace bflab {

namespace {

std::vector<Certificate> g0_certificates(int k) {
    int n = 2 * k;
    std::vector<Certificate> certs;
    certs.reserve(k);
    for (int i = 0; i < k; ++i) {
        Certificate c(n, 0, 0);
        c = c.with(2 * i + 1, true).with(2 * i + 2, true);
        for (int j = 0; j < k; ++j)
            if (j != i) c = c.with(2 * j + 1, false);
        for (int d = 1; d <= k / 2; ++d) {
            int j = (i + d) % k;
            c = c.with(2 * j + 2, false);
        }
        certs.push_back(c);
    }
    return certs;
}

BooleanFunction or_of_certificates(int n, const std::vector<Certificate>& certs) {
    BooleanFunction f(n);
    for (Word x = 0; x < f.table_size(); ++x) {
        for (const Certificate& c : certs) {
            if ((x & c.assigned) == c.values) {
                f.set_bit(x, true);
                break;
            }
        }
    }
    return f;
}

}  // namespace

Construction g0(int k) {
    if (k < 2 || k > 12) throw std::invalid_argument("g0 requires 2 <= k <= 12");
    ConstructionSpec spec{Family::G0, k, 1, k, 2 * k};
    std::vector<Certificate> certs = g0_certificates(k);
    BooleanFunction f = or_of_certificates(2 * k, certs);
    return Construction{spec, f, certs, claimed_profile(spec)};
}

Construction or_compose_g0(int m, int r) {
    if (m < 1 || r < 2) throw std::invalid_argument("or_compose_g0 requires m >= 1, r >= 2");
    int n = 2 * m * r;
    if (n > kMaxPositions) throw std::invalid_argument("or_compose_g0 size 2*m*r exceeds 24");
    ConstructionSpec spec{Family::OrComposedG0, m * r, m, r, n};

    std::vector<Certificate> branch = g0_certificates(r);
    std::vector<Certificate> certs;
    certs.reserve(static_cast<size_t>(m) * r);
    for (int i = 0; i < m; ++i) {
        int shift = i * 2 * r;
        for (const Certificate& c : branch)
            certs.push_back(Certificate(n, c.assigned << shift, c.values << shift));
    }
    BooleanFunction f = or_of_certificates(n, certs);
    return Construction{spec, f, certs, claimed_profile(spec)};
}

Construction named(Family family, int n) {
    if (n < 1 || n > kMaxPositions) throw std::invalid_argument("named requires 1 <= n <= 24");
    ConstructionSpec spec{family, 0, 0, 0, n};
    BooleanFunction f(n);
    switch (family) {
        case Family::Or:
            for (Word x = 1; x < f.table_size(); ++x) f.set_bit(x, true);
            break;
        case Family::And:
            f.set_bit(full_mask(n), true);
            break;
        case Family::Const0:
            break;
        case Family::Const1:
            for (Word x = 0; x < f.table_size(); ++x) f.set_bit(x, true);
            break;
        default:
            throw std::invalid_argument("named supports Or, And, Const0, Const1");
    }
    return Construction{spec, f, {}, claimed_profile(spec)};
}

MeasureProfile claimed_profile(const ConstructionSpec& spec) {
    MeasureProfile p;
    switch (spec.family) {
        case Family::G0:
            p.s0 = 1;
            p.bs0 = spec.k;
            p.s1 = 3 * spec.k / 2 + 1;
            p.c1 = 3 * spec.k / 2 + 1;
            break;
        case Family::OrComposedG0:
            p.s0 = spec.m;
            p.bs0 = spec.m * spec.r;
            p.c1 = 3 * spec.r / 2 + 1;
            break;
        case Family::Or:
            p.s0 = spec.n;
            p.bs0 = spec.n;
            p.c0 = spec.n;
            p.s1 = 1;
            p.bs1 = 1;
            p.c1 = 1;
            break;
        case Family::And:
            p.s0 = 1;
            p.bs0 = 1;
            p.c0 = 1;
            p.s1 = spec.n;
            p.bs1 = spec.n;
            p.c1 = spec.n;
            break;
        case Family::Const0:
            p.s0 = 0;
            p.bs0 = 0;
            p.c0 = 0;
            break;
        case Family::Const1:
            p.s1 = 0;
            p.bs1 = 0;
            p.c1 = 0;
            break;
    }
    return p;
}

}  // namespace bflab
