#ifndef COBCALC_TESTS_TESTUTIL_HPP
#define COBCALC_TESTS_TESTUTIL_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "cobcalc/cobordism.hpp"
#include "cobcalc/partition.hpp"
#include "cobcalc/rational.hpp"

namespace testutil {

inline cobcalc::Rational q(long num, long den = 1) {
    cobcalc::Rational r(num, den);
    r.canonicalize();
    return r;
}

inline cobcalc::Partition part(std::initializer_list<int> parts) {
    return cobcalc::Partition(std::vector<int>(parts));
}

inline cobcalc::Rational random_rational(std::mt19937_64& rng, long spread = 9,
                                         long max_den = 4) {
    std::uniform_int_distribution<long> num(-spread, spread);
    std::uniform_int_distribution<long> den(1, max_den);
    return q(num(rng), den(rng));
}

inline cobcalc::CobordismClass random_class(std::mt19937_64& rng, int dim, long spread = 9) {
    std::map<cobcalc::Partition, cobcalc::Rational, cobcalc::PartitionOrder> chern;
    for (const cobcalc::Partition& p : cobcalc::enumerate_partitions(dim))
        chern.emplace(p, random_rational(rng, spread));
    return cobcalc::CobordismClass(dim, std::move(chern));
}

}  // namespace testutil

#endif
