#pragma once

#include "octostokes/errors.hpp"
#include "octostokes/multi_index.hpp"
#include "octostokes/octonion.hpp"
#include "octostokes/scalar.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace octostokes {

/// A finitely supported octonion-valued function on the lattice hZ^8.
/// Storage is sparse and normalized: no stored value is the zero octonion.
/// Entries are keyed by MultiIndex in lexicographic order, which fixes the
/// canonical summation order. Immutable after construction.
template <ScalarRing S>
class Field {
public:
    using EntryMap = std::map<MultiIndex, Octonion<S>>;

    /// Empty field. The lattice constant must be positive; the exact mode
    /// additionally requires h = 1 so that h^-1 and h^8 stay in the ring.
    explicit Field(S h) : h_(std::move(h)) { validate_h(); }

    /// Takes ownership of prebuilt entries and normalizes them. Used by the
    /// operators; zero values are dropped, everything else is kept as-is.
    Field(S h, EntryMap entries) : h_(std::move(h)), entries_(std::move(entries)) {
        validate_h();
        for (auto it = entries_.begin(); it != entries_.end();) {
            validate_value(it->second);
            it = it->second.is_zero() ? entries_.erase(it) : std::next(it);
        }
    }

    const S& lattice_constant() const { return h_; }

    /// Value at m; the zero octonion off the support.
    Octonion<S> at(const MultiIndex& m) const {
        auto it = entries_.find(m);
        return it == entries_.end() ? Octonion<S>::zero() : it->second;
    }

    /// Pointer form of at(): nullptr off the support. Avoids copies in the
    /// evaluator inner loops.
    const Octonion<S>* find(const MultiIndex& m) const {
        auto it = entries_.find(m);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const EntryMap& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    void validate_h() const {
        if constexpr (is_exact_scalar_v<S>) {
            if (!(h_ == S(1))) {
                throw std::invalid_argument("exact mode requires lattice constant h = 1");
            }
        } else {
            if (!(h_ > S(0)) || !std::isfinite(static_cast<double>(h_))) {
                throw std::invalid_argument("lattice constant h must be positive and finite");
            }
        }
    }

    static void validate_value(const Octonion<S>& v) {
        if constexpr (!is_exact_scalar_v<S>) {
            for (std::size_t k = 0; k < 8; ++k) {
                if (!std::isfinite(static_cast<double>(v[k]))) {
                    throw std::invalid_argument("float-mode coefficients must be finite");
                }
            }
        }
    }

    S h_;
    EntryMap entries_;
};

/// Builds a normalized field from (index, value) pairs. Duplicate indices are
/// rejected rather than merged.
template <ScalarRing S>
Field<S> field_from_entries(S h, const std::vector<std::pair<MultiIndex, Octonion<S>>>& pairs) {
    typename Field<S>::EntryMap entries;
    for (const auto& [m, v] : pairs) {
        if (!entries.emplace(m, v).second) {
            throw std::invalid_argument("duplicate lattice index " + m.str());
        }
    }
    return Field<S>(std::move(h), std::move(entries));
}

/// Fields entering one formula must live on the same lattice.
template <ScalarRing S>
void require_same_lattice(const Field<S>& a, const Field<S>& b) {
    if (!(a.lattice_constant() == b.lattice_constant())) {
        throw LatticeMismatchError("fields carry different lattice constants");
    }
}

} // namespace octostokes
