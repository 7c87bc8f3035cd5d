#pragma once

#include <doctest.h>

#include <string>

#include "decarg/error.hpp"
#include "decarg/io.hpp"
#include "support/gen.hpp"

namespace testing {

inline decarg::Problem fixture(const std::string& name) { return decarg::parse_problem(gen::fixture(name)); }

template <class T>
T fixture_as(const std::string& name) {
    return std::get<T>(fixture(name));
}

template <class F>
decarg::ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const decarg::Error& e) {
        return e.code();
    }
    FAIL("expected a decarg::Error");
    return decarg::ErrorCode::IoError;
}

}  // namespace testing
