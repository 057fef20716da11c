#ifndef TRIFREE_BIGINT_HPP
#define TRIFREE_BIGINT_HPP

#include <gmpxx.h>

namespace trifree {

using BigInt = mpz_class;

}  // namespace trifree

#endif  // TRIFREE_BIGINT_HPP
