#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperlab::par {

/// How instance sweeps execute. The serial path is the reference
/// implementation; the OpenMP path must produce identical results (outputs
/// are collected per index and folded in index order, so scheduling cannot
/// change the outcome).
enum class Mode { serial, openmp };

inline bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Evaluate fn(0..n-1), returning results in index order. Exceptions from
/// worker iterations are rethrown after the sweep (first index wins).
template <typename Result, typename Fn>
std::vector<Result> map_indexed(std::size_t n, Mode mode, Fn&& fn) {
    std::vector<Result> out(n);
    if (mode == Mode::openmp && openmp_available()) {
        std::vector<std::string> errors(n);
        std::vector<char> failed(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
            } catch (const std::exception& e) {
                failed[static_cast<std::size_t>(i)] = 1;
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (failed[i]) throw std::runtime_error(errors[i]);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

inline Mode parse_mode(const std::string& s) {
    if (s == "serial") return Mode::serial;
    if (s == "parallel" || s == "openmp") return Mode::openmp;
    throw std::invalid_argument("unknown execution mode: " + s);
}

inline std::string mode_name(Mode m) { return m == Mode::serial ? "serial" : "openmp"; }

}  // namespace hyperlab::par
