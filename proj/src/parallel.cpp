#include "sandlab/parallel.hpp"

#include "sandlab/error.hpp"

#include <cstdlib>
#include <string>

namespace sandlab {

unsigned resolve_jobs(unsigned requested) {
    if (const char* env = std::getenv("SANDPILE_LAB_JOBS"); env && *env) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("SANDPILE_LAB_JOBS must be a positive integer, got '") + env + "'");
    }
    if (requested >= 1) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace sandlab
