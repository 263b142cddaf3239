#include "formcode/channel.hpp"

#include <sstream>

#include "formcode/error.hpp"
#include "formcode/linalg.hpp"
#include "formcode/util.hpp"

namespace formcode {

namespace {

// rows of a uniformly random invertible l x l matrix
std::vector<std::vector<uint32_t>> random_invertible(const Field& f, int l, SplitMix64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<uint32_t>> m(l, std::vector<uint32_t>(l));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<uint32_t>(rng.below(f.q()));
        if (linalg::rank(f, m, l) == l) return m;
    }
    throw Error("internal_error", "failed to sample an invertible matrix");
}

}  // namespace

Subspace corrupt(const Subspace& v, const ChannelConfig& cfg) {
    const Field& f = *v.field();
    int l = v.dim(), ambient = v.ambient();
    if (cfg.rho < 0 || cfg.t < 0 || cfg.rho > l)
        throw Error(errs::infeasible_channel, "erasure count outside [0, dim]");
    if (l - cfg.rho + cfg.t > ambient)
        throw Error(errs::infeasible_channel, "received dimension exceeds the ambient space");
    if (l + cfg.t > ambient)
        throw Error(errs::infeasible_channel,
                    "error vectors cannot avoid the transmitted space");

    SplitMix64 rng(cfg.seed);
    auto basis = v.basis_rows();
    std::vector<std::vector<uint32_t>> kept;

    if (l > 0) {
        auto mix = random_invertible(f, l, rng);
        for (int i = 0; i < l - cfg.rho; ++i) {
            std::vector<uint32_t> row(ambient, 0);
            for (int j = 0; j < l; ++j) {
                if (mix[i][j] == 0) continue;
                for (int c = 0; c < ambient; ++c)
                    row[c] = f.add(row[c], f.mul(mix[i][j], basis[j][c]));
            }
            kept.push_back(std::move(row));
        }
    }

    // grow V + U while collecting error vectors outside it
    std::vector<std::vector<uint32_t>> span = basis;
    std::vector<std::vector<uint32_t>> received = kept;
    int span_dim = l;
    for (int added = 0, attempts = 0; added < cfg.t;) {
        if (++attempts > 100000)
            throw Error("internal_error", "error-vector rejection sampling stalled");
        std::vector<uint32_t> w(ambient);
        for (auto& x : w) x = static_cast<uint32_t>(rng.below(f.q()));
        auto trial = span;
        trial.push_back(w);
        if (linalg::rank(f, std::move(trial), ambient) == span_dim + 1) {
            span.push_back(w);
            ++span_dim;
            received.push_back(w);
            ++added;
        }
    }

    Subspace u = Subspace::from_vectors(v.field(), ambient, received);
    if (u.dim() != l - cfg.rho + cfg.t)
        throw Error("internal_error", "corrupted subspace has unexpected dimension");
    return u;
}

DecodeResult decode(const SubspaceCode& code, const Subspace& received) {
    if (code.size() == 0) throw Error(errs::empty_family, "decoding against an empty code");
    if (received.ambient() != code.ambient() ||
        !received.field()->same_as(*code.field()))
        throw Error(errs::ambient_mismatch, "received subspace in a different ambient space");
    int best = -1;
    size_t best_index = 0, attained = 0;
    for (size_t i = 0; i < code.size(); ++i) {
        int d = dist(code.codewords()[i], received);
        if (best < 0 || d < best) {
            best = d;
            best_index = i;
            attained = 1;
        } else if (d == best) {
            ++attained;
        }
    }
    DecodeResult r;
    r.distance = best;
    r.margin = theoretical_distance(code.vars_minus_one(), code.form_degree(),
                                    code.generator_degree()) /
                   2 -
               best;
    if (attained == 1) {
        r.status = DecodeResult::Status::unique;
        r.index = best_index;
    } else {
        r.status = DecodeResult::Status::ambiguous;
    }
    return r;
}

SimulationReport simulate(const SubspaceCode& code, int rho, int t, uint64_t trials,
                          uint64_t seed) {
    SimulationReport rep;
    rep.e = code.generator_degree();
    rep.d = code.form_degree();
    rep.q = code.field()->q();
    rep.n = code.vars_minus_one();
    rep.rho = rho;
    rep.t = t;
    rep.trials = trials;
    rep.seed = seed;
    for (uint64_t k = 0; k < trials; ++k) {
        size_t sent = static_cast<size_t>(k % code.size());
        const Subspace& v = code.codewords()[sent];
        ChannelConfig cfg{rho, t, splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL * (k + 1))};
        Subspace u = corrupt(v, cfg);
        if (dist(v, u) != rho + t)
            throw Error(errs::verify_failed, "channel produced the wrong corruption distance");
        DecodeResult res = decode(code, u);
        if (res.status == DecodeResult::Status::ambiguous)
            ++rep.ambiguous;
        else if (*res.index == sent)
            ++rep.unique_correct;
        else
            ++rep.unique_wrong;
    }
    return rep;
}

std::string simulation_csv_header() {
    return "e,d,q,n,rho,t,trials,unique_correct,unique_wrong,ambiguous,seed";
}

std::string simulation_csv_row(const SimulationReport& r) {
    std::ostringstream os;
    os << r.e << ',' << r.d << ',' << r.q << ',' << r.n << ',' << r.rho << ',' << r.t << ','
       << r.trials << ',' << r.unique_correct << ',' << r.unique_wrong << ',' << r.ambiguous
       << ',' << r.seed;
    return os.str();
}

}  // namespace formcode
