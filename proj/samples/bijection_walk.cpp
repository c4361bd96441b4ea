// Walks every path of semilength 3 through the sequence bijection and
// back, printing the pairing.

#include <iostream>

#include <catkit/catkit.hpp>

int main() {
  const int k = 1;
  const long long semilength = 3;
  std::cout << "paths of semilength " << semilength << " opening with " << k
            << " upstep(s), with their sequences:\n";
  catkit::for_each_dyck(semilength, k, [&](const catkit::Path& p) {
    const catkit::ConstrainedSeq v = catkit::dyck_to_seq(p, k);
    const catkit::Path back = catkit::seq_to_dyck(v, k);
    std::cout << "  " << p.str() << "  ->  (" << v.str() << ")  ->  " << back.str()
              << (back == p ? "" : "  ROUND TRIP FAILED") << '\n';
  });
  return 0;
}
