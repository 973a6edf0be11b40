#include "quatgrad/partitions/calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatgrad::partitions {

namespace {
long sum_pairwise_min(const Partition& lambda) {
    long s = 0;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) s += std::min(p[i], p[j]);
    return s;
}

long sum_cross_min(const Partition& lambda, const Partition& mu) {
    long s = 0;
    for (int a : lambda.parts())
        for (int b : mu.parts()) s += std::min(a, b);
    return s;
}
}  // namespace

long dim_cent_gl(const Partition& lambda) { return lambda.size() + 2 * sum_pairwise_min(lambda); }

long dim_cent_sl(const Partition& lambda) { return dim_cent_gl(lambda) - 1; }

long dim_cent_sp(const Partition& lambda) {
    if (!lambda.admissible_sp()) throw std::invalid_argument("dim_cent_sp: odd parts must occur in pairs: " + lambda.to_string());
    return (dim_cent_gl(lambda) + lambda.odd_count()) / 2;
}

long dim_cent_so(const Partition& lambda) {
    if (!lambda.admissible_so()) throw std::invalid_argument("dim_cent_so: even parts must occur in pairs: " + lambda.to_string());
    return (dim_cent_gl(lambda) - lambda.odd_count()) / 2;
}

std::string pair_name(PairTag tag) {
    switch (tag) {
        case PairTag::sl_so: return "sl-so";
        case PairTag::sp_gl: return "sp-gl";
        case PairTag::so_gl: return "so-gl";
        case PairTag::sl_sl: return "sl-sl";
        case PairTag::sl_sp: return "sl-sp";
        case PairTag::sp_sp: return "sp-sp";
        case PairTag::so_so: return "so-so";
    }
    throw std::logic_error("pair_name: bad tag");
}

const std::vector<PairTag>& all_pairs() {
    static const std::vector<PairTag> tags{PairTag::sl_so, PairTag::sp_gl, PairTag::so_gl, PairTag::sl_sl,
                                           PairTag::sl_sp, PairTag::sp_sp, PairTag::so_so};
    return tags;
}

PairTag parse_pair(const std::string& name) {
    for (PairTag t : all_pairs())
        if (pair_name(t) == name) return t;
    throw std::invalid_argument("unknown pair: " + name);
}

bool has_closed_formula(PairTag tag) {
    return tag == PairTag::sl_so || tag == PairTag::sp_gl || tag == PairTag::so_gl || tag == PairTag::sl_sl;
}

bool takes_two_partitions(PairTag tag) {
    return tag == PairTag::sl_sl || tag == PairTag::sp_sp || tag == PairTag::so_so;
}

bool NilpotentDatum::is_zero() const { return lambda.is_zero_orbit() && mu.is_zero_orbit(); }

std::string NilpotentDatum::to_string() const {
    if (mu.length() == 0) return lambda.to_string();
    return lambda.to_string() + ";" + mu.to_string();
}

void check_datum(PairTag tag, const NilpotentDatum& d) {
    if (d.lambda.length() == 0) throw std::invalid_argument("nilpotent datum: empty partition");
    if (takes_two_partitions(tag) != (d.mu.length() > 0))
        throw std::invalid_argument("nilpotent datum: wrong number of partitions for " + pair_name(tag));
    switch (tag) {
        case PairTag::sl_so:
            if (!d.lambda.admissible_so()) throw std::invalid_argument("sl-so: partition not of so type: " + d.lambda.to_string());
            break;
        case PairTag::sl_sp:
            if (!d.lambda.admissible_sp()) throw std::invalid_argument("sl-sp: partition not of sp type: " + d.lambda.to_string());
            break;
        case PairTag::sp_sp:
            if (!d.lambda.admissible_sp() || !d.mu.admissible_sp())
                throw std::invalid_argument("sp-sp: partitions not of sp type: " + d.to_string());
            break;
        case PairTag::so_so:
            if (!d.lambda.admissible_so() || !d.mu.admissible_so())
                throw std::invalid_argument("so-so: partitions not of so type: " + d.to_string());
            break;
        default: break;
    }
}

int ambient_size(PairTag tag, const NilpotentDatum& d) {
    switch (tag) {
        case PairTag::sl_so:
        case PairTag::sl_sp: return d.lambda.size();
        case PairTag::sp_gl:
        case PairTag::so_gl: return 2 * d.lambda.size();
        case PairTag::sl_sl:
        case PairTag::sp_sp:
        case PairTag::so_so: return d.lambda.size() + d.mu.size();
    }
    throw std::logic_error("ambient_size: bad tag");
}

GradedDims formula_dims(PairTag tag, const NilpotentDatum& d) {
    check_datum(tag, d);
    const long n = d.lambda.size();
    GradedDims out;
    switch (tag) {
        case PairTag::sl_so:
            out.g0 = dim_cent_so(d.lambda);
            out.g1 = dim_cent_sl(d.lambda) - out.g0;
            out.rank = n - 1;
            return out;
        case PairTag::sp_gl:
            out.g0 = dim_cent_gl(d.lambda);
            out.g1 = dim_cent_sp(d.lambda.doubled()) - out.g0;
            out.rank = n;
            return out;
        case PairTag::so_gl:
            out.g0 = dim_cent_gl(d.lambda);
            out.g1 = dim_cent_so(d.lambda.doubled()) - out.g0;
            out.rank = n;
            return out;
        case PairTag::sl_sl: {
            const long m = d.mu.size();
            out.g0 = dim_cent_gl(d.lambda) + dim_cent_gl(d.mu) - 1;
            out.g1 = 2 * sum_cross_min(d.lambda, d.mu);
            out.rank = n + m - 1;
            return out;
        }
        default: throw std::invalid_argument("no closed formula for pair " + pair_name(tag));
    }
}

long defect(PairTag tag, const NilpotentDatum& d) { return formula_dims(tag, d).defect(); }

long F(const Partition& lambda, const Partition& mu) {
    if (lambda.length() == 0 || mu.length() == 0) throw std::invalid_argument("F: partitions must be nonempty");
    long s = -1;
    for (std::size_t i = 0; i < lambda.length(); ++i) s += static_cast<long>(i + 1) * lambda.parts()[i];
    for (std::size_t j = 0; j < mu.length(); ++j) s += static_cast<long>(j + 1) * mu.parts()[j];
    return s - sum_cross_min(lambda, mu);
}

long F_recursion_value(const Partition& lambda, const Partition& mu) {
    if (lambda.length() < 2 || mu.length() < 2) throw std::invalid_argument("F_recursion_value: both partitions need two parts");
    const auto& l = lambda.parts();
    const auto& m = mu.parts();
    long v = F(lambda.tail(), mu.tail()) + std::max(l[0], m[0]);
    for (std::size_t i = 1; i < l.size(); ++i) v += l[i] - std::min(l[i], m[0]);
    for (std::size_t j = 1; j < m.size(); ++j) v += m[j] - std::min(l[0], m[j]);
    return v;
}

std::vector<NilpotentDatum> enumerate_data(PairTag tag, int bound) {
    std::vector<NilpotentDatum> out;
    auto keep = [&](const Partition& p) {
        switch (tag) {
            case PairTag::sl_so:
            case PairTag::so_so: return p.admissible_so();
            case PairTag::sl_sp:
            case PairTag::sp_sp: return p.admissible_sp();
            default: return true;
        }
    };
    switch (tag) {
        case PairTag::sl_so:
        case PairTag::sp_gl:
        case PairTag::so_gl:
            for (int n = 1; n <= bound; ++n)
                for (const auto& p : partitions_of(n))
                    if (keep(p) && !p.is_zero_orbit()) out.push_back({p, Partition()});
            break;
        case PairTag::sl_sp:
            for (int n = 1; n <= bound; ++n)
                for (const auto& p : partitions_of(2 * n))
                    if (keep(p) && !p.is_zero_orbit()) out.push_back({p, Partition()});
            break;
        case PairTag::sl_sl:
        case PairTag::so_so:
        case PairTag::sp_sp: {
            const int scale = (tag == PairTag::sp_sp) ? 2 : 1;
            for (int total = 2; total <= bound; ++total)
                for (int n = total - 1; n >= 1; --n) {
                    const int m = total - n;
                    if (tag != PairTag::sp_sp && total < 3) continue;
                    for (const auto& p : partitions_of(scale * n))
                        for (const auto& q : partitions_of(scale * m)) {
                            if (!keep(p) || !keep(q)) continue;
                            NilpotentDatum d{p, q};
                            if (d.is_zero() && tag != PairTag::sl_sl) continue;
                            out.push_back(std::move(d));
                        }
                }
            break;
        }
    }
    return out;
}

}  // namespace quatgrad::partitions
