#include "rank2/commutant.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace rank2 {

namespace {

using u128 = unsigned __int128;

// One matrix entry of the constraint system, before any field is chosen:
// row `key`, column `col`, value mult * f_coefficient[fidx].
struct Entry {
    u128 key;
    std::uint32_t col;
    std::uint32_t fidx;
    std::int64_t mult;
};

constexpr std::size_t kEngineEntryCap = 8'000'000;
constexpr int kMaxBaseAttempts = 6;
constexpr int kMaxExtraPrimes = 8;

std::size_t bits_for(std::size_t distinct_values) {
    std::size_t b = 1;
    while ((std::size_t{1} << b) < distinct_values) ++b;
    return b;
}

// ---- constraint assembly -------------------------------------------------

std::vector<Entry> build_free_entries(const NcPoly& f, std::size_t d,
                                      const std::vector<Word>& fwords, std::size_t n_cols) {
    const std::size_t n = f.alphabet().size();
    const std::size_t p = f.degree().value();
    const std::size_t bits = bits_for(std::max<std::size_t>(n, 2));
    if (bits * (p + d) > 120)
        throw MatrixTooLarge("centralizer kernel search: words too long to index");
    if (2 * fwords.size() * n_cols > kEngineEntryCap)
        throw MatrixTooLarge("centralizer kernel search: constraint system too large");

    auto pack = [bits](const Word& a, const Word& b) {
        u128 v = 0;
        std::size_t pos = 0;
        for (std::uint32_t l : a.letters()) v |= static_cast<u128>(l) << (bits * pos++);
        for (std::uint32_t l : b.letters()) v |= static_cast<u128>(l) << (bits * pos++);
        return v | (static_cast<u128>(pos) << 120);
    };

    std::vector<Entry> entries;
    entries.reserve(2 * fwords.size() * n_cols);
    for (std::uint32_t j = 0; j < n_cols; ++j) {
        Word w = word_at_basis_index(j, n);
        for (std::uint32_t i = 0; i < fwords.size(); ++i) {
            entries.push_back({pack(fwords[i], w), j, i, +1});
            entries.push_back({pack(w, fwords[i]), j, i, -1});
        }
    }
    return entries;
}

std::vector<Entry> build_comm_entries(const CPoly& f, std::size_t d,
                                      const std::vector<ExpVec>& fmons, std::size_t n_cols) {
    const std::size_t n = f.alphabet().size();
    const std::size_t p = f.degree().value();
    const std::size_t ebits = bits_for(p + d + 1);
    const std::size_t n_pairs = n < 2 ? 0 : n * (n - 1) / 2;
    // n_pairs == 0 (one variable) leaves every constraint vacuous, which is
    // the correct kernel: every g has all (no) Jacobians zero against f.
    if (n_pairs > 0 && (n_pairs > 255 || 8 + n * ebits > 128))
        throw MatrixTooLarge("centralizer kernel search: exponent keys too wide");
    if (n_pairs * fmons.size() * n_cols > kEngineEntryCap)
        throw MatrixTooLarge("centralizer kernel search: constraint system too large");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    auto pack = [&](std::size_t pair_idx, const std::vector<std::int64_t>& e) {
        u128 v = static_cast<u128>(pair_idx);
        for (std::size_t i = 0; i < n; ++i)
            v |= static_cast<u128>(static_cast<std::uint64_t>(e[i])) << (8 + ebits * i);
        return v;
    };

    std::vector<Entry> entries;
    std::vector<std::int64_t> target(n);
    for (std::uint32_t j = 0; j < n_cols; ++j) {
        ExpVec mu = monomial_at_basis_index(j, n);
        for (std::uint32_t i = 0; i < fmons.size(); ++i) {
            const ExpVec& s = fmons[i];
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                auto [a, b] = pairs[pi];
                std::int64_t mult = static_cast<std::int64_t>(s[a]) * mu[b] -
                                    static_cast<std::int64_t>(s[b]) * mu[a];
                if (mult == 0) continue;
                for (std::size_t v = 0; v < n; ++v)
                    target[v] = static_cast<std::int64_t>(s[v]) + mu[v];
                --target[a];
                --target[b];
                entries.push_back({pack(pi, target), j, i, mult});
            }
        }
    }
    return entries;
}

// ---- field policies --------------------------------------------------------

struct FpOps {
    std::uint64_t p;
    using V = std::uint64_t;
    static bool is_zero(V a) { return a == 0; }
    V add(V a, V b) const { return static_cast<V>((static_cast<u128>(a) + b) % p); }
    V sub(V a, V b) const { return a >= b ? a - b : a + (p - b); }
    V mul(V a, V b) const { return mulmod_u64(a, b, p); }
    V neg(V a) const { return a == 0 ? 0 : p - a; }
    V inv(V a) const { return invmod_u64(a, p); }
    V value(V coeff, std::int64_t mult) const {
        std::uint64_t m = static_cast<std::uint64_t>(mult < 0 ? -mult : mult) % p;
        V r = mul(coeff, m);
        return mult < 0 ? neg(r) : r;
    }
};

struct ExactOps {
    FieldSpec field;
    using V = Scalar;
    static bool is_zero(const V& a) { return a.is_zero(); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    V inv(const V& a) const { return a.inverse(); }
    V value(const V& coeff, std::int64_t mult) const {
        return coeff * Scalar::of_int(field, mult);
    }
};

// ---- sparse echelon with full reduction ------------------------------------

template <class Ops>
struct Echelon {
    using V = typename Ops::V;
    using Row = std::vector<std::pair<std::uint32_t, V>>;

    explicit Echelon(const Ops& ops) : ops_(ops) {}

    // row must be sorted by column with no duplicates and no zero values
    void consume(Row row) {
        std::size_t i = 0;
        while (i < row.size()) {
            auto [c, v] = row[i];
            auto it = pivot_of_col_.find(c);
            if (it == pivot_of_col_.end()) {
                ++i;
                continue;
            }
            subtract(row, v, rows_[it->second]);
            i = lower_bound_index(row, c);
        }
        if (row.empty()) return;

        const std::uint32_t pc = row.front().first;
        const V lead_inv = ops_.inv(row.front().second);
        for (auto& [c, v] : row) v = ops_.mul(v, lead_inv);

        // Mark the pivot before updating other rows, so re-registration skips
        // it; take the toucher list by move since updates re-register rows.
        const std::uint32_t id = static_cast<std::uint32_t>(rows_.size());
        pivot_of_col_.emplace(pc, id);
        std::vector<std::uint32_t> affected;
        if (auto touch = touchers_.find(pc); touch != touchers_.end()) {
            affected = std::move(touch->second);
            touchers_.erase(touch);
        }
        for (std::uint32_t r : affected) {
            const V* entry = find_entry(rows_[r], pc);
            if (entry == nullptr) continue;
            V factor = *entry;
            subtract(rows_[r], factor, row);
            register_touch(r);
        }
        rows_.push_back(std::move(row));
        pivot_col_.push_back(pc);
        register_touch(id);
    }

    std::vector<std::uint32_t> sorted_pivot_cols() const {
        std::vector<std::uint32_t> p = pivot_col_;
        std::sort(p.begin(), p.end());
        return p;
    }

    // canonical kernel basis: one dense vector per free column (ascending)
    std::vector<std::vector<V>> kernel(std::size_t n_cols, const V& zero, const V& one) const {
        std::vector<bool> is_pivot(n_cols, false);
        for (std::uint32_t c : pivot_col_) is_pivot[c] = true;
        std::vector<std::vector<V>> out;
        for (std::size_t fc = 0; fc < n_cols; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<V> v(n_cols, zero);
            v[fc] = one;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const V* entry = find_entry(rows_[r], static_cast<std::uint32_t>(fc));
                if (entry != nullptr) v[pivot_col_[r]] = ops_.neg(*entry);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    static std::size_t lower_bound_index(const Row& row, std::uint32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        return static_cast<std::size_t>(it - row.begin());
    }

    static const V* find_entry(const Row& row, std::uint32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it == row.end() || it->first != col || Ops::is_zero(it->second)) return nullptr;
        return &it->second;
    }

    // target -= factor * source
    void subtract(Row& target, V factor, const Row& source) {
        Row out;
        out.reserve(target.size() + source.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < source.size()) {
            if (b == source.size() ||
                (a < target.size() && target[a].first < source[b].first)) {
                out.push_back(target[a++]);
            } else if (a == target.size() || source[b].first < target[a].first) {
                V v = ops_.neg(ops_.mul(factor, source[b].second));
                if (!Ops::is_zero(v)) out.emplace_back(source[b].first, std::move(v));
                ++b;
            } else {
                V v = ops_.sub(target[a].second, ops_.mul(factor, source[b].second));
                if (!Ops::is_zero(v)) out.emplace_back(target[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        target = std::move(out);
    }

    void register_touch(std::uint32_t row_id) {
        for (const auto& [c, v] : rows_[row_id])
            if (pivot_of_col_.find(c) == pivot_of_col_.end()) touchers_[c].push_back(row_id);
    }

    Ops ops_;
    std::vector<Row> rows_;
    std::vector<std::uint32_t> pivot_col_;
    std::unordered_map<std::uint32_t, std::uint32_t> pivot_of_col_;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> touchers_;
};

template <class Ops>
struct EchelonRun {
    std::vector<std::uint32_t> pivot_cols;
    std::vector<std::vector<typename Ops::V>> kernel;
};

// entries must be sorted by (key, col)
template <class Ops>
EchelonRun<Ops> run_echelon(const std::vector<Entry>& entries,
                            const std::vector<typename Ops::V>& fvals, std::size_t n_cols,
                            const Ops& ops, const typename Ops::V& zero,
                            const typename Ops::V& one) {
    Echelon<Ops> ech(ops);
    typename Echelon<Ops>::Row row;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        row.clear();
        while (j < entries.size() && entries[j].key == entries[i].key) {
            const std::uint32_t col = entries[j].col;
            typename Ops::V acc = zero;
            while (j < entries.size() && entries[j].key == entries[i].key &&
                   entries[j].col == col) {
                acc = ops.add(acc, ops.value(fvals[entries[j].fidx], entries[j].mult));
                ++j;
            }
            if (!Ops::is_zero(acc)) row.emplace_back(col, std::move(acc));
        }
        ech.consume(std::move(row));
        row = {};
        i = j;
    }
    EchelonRun<Ops> out;
    out.pivot_cols = ech.sorted_pivot_cols();
    out.kernel = ech.kernel(n_cols, zero, one);
    return out;
}

// ---- rational reconstruction ----------------------------------------------

std::optional<BigRat> rational_reconstruct(const BigInt& residue, const BigInt& modulus) {
    const BigInt half = (modulus - 1) / 2;
    const BigInt bound = boost::multiprecision::sqrt(half);
    BigInt r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    BigInt num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den > bound) return std::nullopt;
    if (boost::multiprecision::gcd(num, den) != 1) return std::nullopt;
    return BigRat(num, den);
}

// deterministic sequence of word-size primes for the modular runs
class PrimeSource {
public:
    PrimeSource() : rng_(0x52414e4b32ull) {}
    std::uint64_t next() {
        for (;;) {
            std::uint64_t c = (rng_() % (std::uint64_t{1} << 30)) | (std::uint64_t{1} << 30) | 1;
            if (is_prime_u64(c)) return c;
        }
    }

private:
    std::mt19937_64 rng_;
};

using Verifier = std::function<bool(const std::vector<Scalar>&)>;

CommutantBasis finish(std::vector<std::vector<Scalar>> vectors,
                      const std::vector<std::uint32_t>& pivot_cols, std::size_t n_cols) {
    std::vector<bool> is_pivot(n_cols, false);
    for (std::uint32_t c : pivot_cols) is_pivot[c] = true;
    CommutantBasis out;
    out.vectors = std::move(vectors);
    for (std::size_t c = 0; c < n_cols; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    return out;
}

CommutantBasis solve_system(const std::vector<Entry>& sorted_entries,
                            const std::vector<Scalar>& fcoeffs, const FieldSpec& field,
                            std::size_t n_cols, const Verifier& verified) {
    if (!field.is_rationals()) {
        // the session field already is a prime field; one exact pass
        FpOps ops{field.modulus()};
        std::vector<std::uint64_t> fvals(fcoeffs.size());
        for (std::size_t i = 0; i < fcoeffs.size(); ++i) fvals[i] = fcoeffs[i].residue();
        auto run = run_echelon(sorted_entries, fvals, n_cols, ops, 0, 1 % field.modulus());
        std::vector<std::vector<Scalar>> vectors;
        for (const auto& kv : run.kernel) {
            std::vector<Scalar> v;
            v.reserve(kv.size());
            for (std::uint64_t r : kv) v.push_back(Scalar::of_big(field, BigInt(r)));
            vectors.push_back(std::move(v));
        }
        for (const auto& v : vectors)
            if (!verified(v))
                throw InternalVerificationFailure("prime-field kernel vector failed verification");
        return finish(std::move(vectors), run.pivot_cols, n_cols);
    }

    PrimeSource primes;
    auto residues_mod = [&fcoeffs](std::uint64_t q,
                                   std::vector<std::uint64_t>& out) -> bool {
        out.resize(fcoeffs.size());
        for (std::size_t i = 0; i < fcoeffs.size(); ++i) {
            const BigRat& v = fcoeffs[i].rational_value();
            BigInt den = boost::multiprecision::denominator(v) % q;
            if (den == 0) return false;
            BigInt num = boost::multiprecision::numerator(v) % q;
            if (num < 0) num += q;
            out[i] = mulmod_u64(static_cast<std::uint64_t>(num),
                                invmod_u64(static_cast<std::uint64_t>(den), q), q);
        }
        return true;
    };

    for (int attempt = 0; attempt < kMaxBaseAttempts; ++attempt) {
        std::uint64_t q = primes.next();
        std::vector<std::uint64_t> fvals;
        if (!residues_mod(q, fvals)) continue;
        FpOps ops{q};
        auto base = run_echelon(sorted_entries, fvals, n_cols, ops, 0, 1);

        // residues accumulated by CRT, per kernel vector and coordinate
        std::vector<std::vector<BigInt>> crt(base.kernel.size());
        for (std::size_t k = 0; k < base.kernel.size(); ++k)
            crt[k].assign(base.kernel[k].begin(), base.kernel[k].end());
        BigInt modulus = q;

        for (int extra = 0; extra <= kMaxExtraPrimes; ++extra) {
            // try to lift the accumulated residues to rationals
            bool ok = true;
            std::vector<std::vector<Scalar>> vectors(crt.size());
            for (std::size_t k = 0; k < crt.size() && ok; ++k) {
                vectors[k].reserve(n_cols);
                for (const BigInt& r : crt[k]) {
                    auto lifted = rational_reconstruct(r, modulus);
                    if (!lifted) {
                        ok = false;
                        break;
                    }
                    vectors[k].push_back(Scalar::of_ratio(
                        field, boost::multiprecision::numerator(*lifted),
                        boost::multiprecision::denominator(*lifted)));
                }
            }
            if (ok) {
                for (const auto& v : vectors)
                    if (!verified(v)) {
                        ok = false;
                        break;
                    }
                if (ok) return finish(std::move(vectors), base.pivot_cols, n_cols);
                break;  // verified reconstruction failed: unlucky base prime
            }
            if (extra == kMaxExtraPrimes) break;

            std::uint64_t q2 = primes.next();
            if (q2 == q || modulus % q2 == 0) continue;
            std::vector<std::uint64_t> fvals2;
            if (!residues_mod(q2, fvals2)) continue;
            FpOps ops2{q2};
            auto more = run_echelon(sorted_entries, fvals2, n_cols, ops2, 0, 1);
            if (more.pivot_cols != base.pivot_cols) {
                if (more.kernel.size() < base.kernel.size()) break;  // restart from scratch
                continue;  // q2 degenerate, skip it
            }
            const BigInt inv_mod_q2 =
                invmod_u64(static_cast<std::uint64_t>(modulus % q2), q2);
            for (std::size_t k = 0; k < crt.size(); ++k)
                for (std::size_t c = 0; c < n_cols; ++c) {
                    BigInt cur = crt[k][c] % q2;
                    BigInt delta = (BigInt(more.kernel[k][c]) - cur) % q2;
                    if (delta < 0) delta += q2;
                    crt[k][c] += modulus * ((delta * inv_mod_q2) % q2);
                }
            modulus *= q2;
        }
    }

    // all modular attempts exhausted; fall back to exact elimination
    ExactOps ops{field};
    auto run = run_echelon(sorted_entries, fcoeffs, n_cols, ops, Scalar::zero(field),
                           Scalar::one(field));
    for (const auto& v : run.kernel)
        if (!verified(v))
            throw InternalVerificationFailure("exact kernel vector failed verification");
    return finish(std::move(run.kernel), run.pivot_cols, n_cols);
}

}  // namespace

CommutantBasis commutant_basis(const NcPoly& f, std::size_t degree_bound) {
    const std::size_t n_cols = word_basis_size(f.alphabet().size(), degree_bound);
    std::vector<Scalar> fcoeffs;
    std::vector<Word> fwords;
    for (const auto& [w, c] : f.terms()) {
        if (w.empty()) continue;  // constants commute with everything
        fwords.push_back(w);
        fcoeffs.push_back(c);
    }
    auto entries = build_free_entries(f, degree_bound, fwords, n_cols);
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.key != b.key ? a.key < b.key : a.col < b.col;
    });
    Verifier verified = [&](const std::vector<Scalar>& coords) {
        NcPoly g = NcPoly::from_vector(f.field(), f.alphabet(), coords, degree_bound);
        return commutator(f, g).is_zero();
    };
    return solve_system(entries, fcoeffs, f.field(), n_cols, verified);
}

CommutantBasis commutant_basis(const CPoly& f, std::size_t degree_bound) {
    const std::size_t n_cols = monomial_basis_size(f.alphabet().size(), degree_bound);
    std::vector<Scalar> fcoeffs;
    std::vector<ExpVec> fmons;
    for (const auto& [e, c] : f.terms()) {
        if (e.is_unit()) continue;
        fmons.push_back(e);
        fcoeffs.push_back(c);
    }
    auto entries = build_comm_entries(f, degree_bound, fmons, n_cols);
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.key != b.key ? a.key < b.key : a.col < b.col;
    });
    Verifier verified = [&](const std::vector<Scalar>& coords) {
        CPoly g = CPoly::from_vector(f.field(), f.alphabet(), coords, degree_bound);
        const std::size_t n = f.alphabet().size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!jacobian_det(f, g, a, b).is_zero()) return false;
        return true;
    };
    return solve_system(entries, fcoeffs, f.field(), n_cols, verified);
}

}  // namespace rank2
