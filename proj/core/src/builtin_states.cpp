#include "xent/builtin_states.hpp"

#include <stdexcept>

namespace xent {

XState demo_two_block() {
    std::vector<double> d(8, 0.0);
    std::vector<cx> e(4, cx{0.0, 0.0});
    d[0] = 5.0 / 12.0;
    d[7] = 1.0 / 4.0;
    e[0] = 2.0 / 7.0;
    d[1] = 1.0 / 4.0;
    d[6] = 1.0 / 12.0;
    e[1] = 1.0 / 8.0;
    return XState(3, std::move(d), std::move(e));
}

XState demo_four_block() {
    std::vector<double> d(8, 0.0);
    std::vector<cx> e(4, cx{0.0, 0.0});
    const double a[4] = {1.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0, 1.0 / 16.0};
    const double b[4] = {1.0 / 8.0, 1.0 / 8.0, 3.0 / 16.0, 1.0 / 8.0};
    const double c[4] = {1.0 / 12.0, 1.0 / 9.0, 1.0 / 10.0, 2.0 / 25.0};
    for (std::size_t l = 0; l < 4; ++l) {
        d[l] = a[l];
        d[7 - l] = b[l];
        e[l] = c[l];
    }
    return XState(3, std::move(d), std::move(e));
}

XState demo_tau3_family(double eps) {
    if (eps < 0.0 || eps > 0.25)
        throw std::invalid_argument("demo_tau3_family: eps must lie in [0, 1/4]");
    std::vector<double> d(8, 0.0);
    std::vector<cx> e(4, cx{0.0, 0.0});
    const double a[4] = {3.0 / 8.0 - eps, 1.0 / 4.0, eps, 1.0 / 16.0};
    const double b[4] = {1.0 / 16.0, 1.0 / 16.0, 1.0 / 16.0, 1.0 / 8.0};
    const double c[4] = {3.0 / 25.0, 1.0 / 9.0, eps / 2.0, 1.0 / 12.0};
    for (std::size_t l = 0; l < 4; ++l) {
        d[l] = a[l];
        d[7 - l] = b[l];
        e[l] = c[l];
    }
    return XState(3, std::move(d), std::move(e));
}

XState ghz_state(int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> d(dim, 0.0);
    std::vector<cx> e(dim / 2, cx{0.0, 0.0});
    d[0] = 0.5;
    d[dim - 1] = 0.5;
    e[0] = 0.5;
    return XState(n, std::move(d), std::move(e));
}

XState maximally_mixed_state(int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> d(dim, 1.0 / double(dim));
    std::vector<cx> e(dim / 2, cx{0.0, 0.0});
    return XState(n, std::move(d), std::move(e));
}

std::optional<XState> builtin_state(const std::string& name) {
    if (name == "fig1") return demo_two_block();
    if (name == "fig2") return demo_four_block();
    if (name == "fig3") return demo_tau3_family(0.0);
    if (name == "fig3b") return demo_tau3_family(1.0 / 128.0);
    if (name == "fig3c") return demo_tau3_family(1.0 / 32.0);
    if (name == "fig3d") return demo_tau3_family(1.0 / 16.0);
    if (name == "ghz") return ghz_state(3);
    if (name == "maxmixed") return maximally_mixed_state(3);
    return std::nullopt;
}

const std::vector<std::string>& builtin_state_names() {
    static const std::vector<std::string> names{
        "fig1", "fig2", "fig3", "fig3b", "fig3c", "fig3d", "ghz", "maxmixed"};
    return names;
}

}  // namespace xent
