// Helpers shared by the unit tests.
#pragma once

#include <functional>

#include "numwall/error.hpp"
#include "numwall/field.hpp"
#include "oracle.hpp"

namespace testing {

// Error code raised by body, or ok.
inline nw::Errc code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const nw::Error& e) {
        return e.code();
    }
    return nw::Errc::ok;
}

// Reference field with the same modulus as f.
inline oracle::Gf mirror(const nw::Field& f) {
    oracle::Gf g{f.p(), f.k(), {}};
    std::uint64_t c = f.modulus_code();
    for (unsigned i = 0; i <= f.k(); ++i) {
        g.mod.push_back(static_cast<std::uint32_t>(c % f.p()));
        c /= f.p();
    }
    if (f.k() == 1) g.mod = {0, 1};
    return g;
}

} // namespace testing
