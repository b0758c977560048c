// Benchmark: integer kernels (parallel and serial) against the direct
// field-arithmetic reference, on a realistically sized S matrix.  The results
// are asserted equal, so this doubles as a slow-path consistency check.

#include "mtc/center.hpp"
#include "mtc/fastcyc.hpp"
#include "mtc/forms.hpp"
#include "mtc/ty.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace mtc;

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& f) {
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same(const std::vector<std::vector<Cyc>>& a, const std::vector<std::vector<Cyc>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!a[i][j].equals(b[i][j])) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    // |A| = 9 gives the largest center in the test range: 72 simples.
    std::vector<long> factors = {3, 3};
    if (argc > 1) {
        factors.clear();
        std::string s = argv[1];
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            factors.push_back(std::stol(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }

    Group g = make_group(factors);
    std::string name;
    for (size_t i = 0; i < g.factors.size(); ++i)
        name += (i ? "," : "") + std::to_string(g.factors[i]);
    std::vector<std::vector<long>> gram(g.rank(), std::vector<long>(g.rank(), 0));
    for (size_t i = 0; i < g.rank(); ++i) gram[i][i] = 1;
    TYCategory c = make_ty(g, bicharacter_from_exponents(g, gram), +1);
    ModularData md = center_modular_data(c);
    std::printf("center of TY({%s}): %ld simples\n", name.c_str(), (long)md.size());

    std::vector<std::vector<Cyc>> gram_par, gram_ser, gram_ref;
    const double t_par = time_of([&] { gram_par = gram_matrix(md.S, true); });
    const double t_ser = time_of([&] { gram_ser = gram_matrix(md.S, false); });
    const double t_ref = time_of([&] { gram_ref = gram_matrix_reference(md.S); });
    std::printf("gram    kernel(parallel) %.3fs   kernel(serial) %.3fs   reference %.3fs\n",
                t_par, t_ser, t_ref);
    if (!same(gram_par, gram_ser) || !same(gram_par, gram_ref)) {
        std::printf("FAIL: gram results disagree\n");
        return 1;
    }

    std::vector<std::vector<std::vector<long>>> n_par, n_ser, n_ref;
    const double v_par = time_of([&] { n_par = verlinde_tensor(md, true); });
    const double v_ser = time_of([&] { n_ser = verlinde_tensor(md, false); });
    const double v_ref = time_of([&] { n_ref = verlinde_tensor_reference(md); });
    std::printf("verlinde kernel(parallel) %.3fs   kernel(serial) %.3fs   reference %.3fs\n",
                v_par, v_ser, v_ref);
    if (n_par != n_ser || n_par != n_ref) {
        std::printf("FAIL: fusion tensors disagree\n");
        return 1;
    }

    std::printf("all kernels agree\n");
    return 0;
}
