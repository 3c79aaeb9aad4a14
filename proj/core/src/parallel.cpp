#include "stereo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace stereo {

int thread_budget() {
    int n = 0;
    if (const char* env = std::getenv("STEREO_THREADS")) {
        try {
            n = std::stoi(env);
        } catch (const std::exception&) {
            n = 0;
        }
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return n > 0 ? n : 1;
}

}  // namespace stereo
