#pragma once

#include <doctest.h>

#include "eigenstrata/error.hpp"

// Runs fn and checks it throws eigenstrata::Error with the given code.
template <class Fn>
eigenstrata::ErrorCode thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const eigenstrata::Error& e) {
        return e.code();
    }
    FAIL("expected an eigenstrata::Error");
    return eigenstrata::ErrorCode::IoError;
}

#define CHECK_THROWS_CODE(expr, ecode) \
    CHECK(thrown_code([&] { (void)(expr); }) == eigenstrata::ErrorCode::ecode)
