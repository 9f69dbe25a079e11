#include "qrhc/config.hpp"

namespace qrhc {

namespace {
std::size_t g_max_dim = 4096;
}

std::size_t max_dim() { return g_max_dim; }
void set_max_dim(std::size_t d) { g_max_dim = d; }

}  // namespace qrhc
