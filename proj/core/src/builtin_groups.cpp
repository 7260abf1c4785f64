#include "frobdet/builtin_groups.hpp"

namespace frobdet {

namespace {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        names.push_back(std::to_string(i));
    }
    return make_group(std::move(t), std::move(names));
}

FiniteGroup klein() {
    // (Z/2)^2 with xor composition; labels follow (0,0),(1,0),(0,1),(1,1)
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return make_group(std::move(t), {"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
}

FiniteGroup s3() {
    // pi1=(1), pi2=(123), pi3=(132), pi4=(23), pi5=(13), pi6=(12),
    // composed as (sigma tau)(x) = sigma(tau(x)).
    std::vector<std::vector<int>> t = {
        {0, 1, 2, 3, 4, 5}, {1, 2, 0, 5, 3, 4}, {2, 0, 1, 4, 5, 3},
        {3, 4, 5, 0, 1, 2}, {4, 5, 3, 2, 0, 1}, {5, 3, 4, 1, 2, 0}};
    return make_group(std::move(t), {"(1)", "(123)", "(132)", "(23)", "(13)", "(12)"});
}

FiniteGroup d4() {
    // r^a s^b, index = a + 4b; (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    std::vector<std::string> names;
    auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
    for (int i = 0; i < 8; ++i) {
        int a = i % 4, b = i / 4;
        for (int j = 0; j < 8; ++j) {
            int c = j % 4, d = j / 4;
            t[i][j] = idx(a + (b ? -c : c), b + d);
        }
    }
    for (int i = 0; i < 8; ++i)
        names.push_back(std::string("r") + std::to_string(i % 4) + (i / 4 ? "s" : ""));
    return make_group(std::move(t), std::move(names));
}

FiniteGroup q8() {
    // 1, -1, i, -i, j, -j, k, -k reordered with identity first:
    // indices: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // base products on {1,i,j,k} with sign
    auto base_mul = [&](int a, int b, int& sign) -> int {
        // a,b in {0:1, 1:i, 2:j, 3:k}
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return prod[a][b];
    };
    auto unpack = [](int idx, int& b, int& s) {
        b = idx / 2;       // 0:1, 1:i, 2:j, 3:k
        s = idx % 2 ? -1 : 1;
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int bi, si, bj, sj, sp;
            unpack(i, bi, si);
            unpack(j, bj, sj);
            int bp = base_mul(bi, bj, sp);
            int idx = 2 * bp + ((si * sj * sp) < 0 ? 1 : 0);
            t[i][j] = idx;
        }
    (void)neg;
    return make_group(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

} // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name == "z1") return cyclic(1);
    if (name == "z2") return cyclic(2);
    if (name == "z3") return cyclic(3);
    if (name == "z4") return cyclic(4);
    if (name == "z5") return cyclic(5);
    if (name == "z6") return cyclic(6);
    if (name == "z7") return cyclic(7);
    if (name == "z8") return cyclic(8);
    if (name == "klein") return klein();
    if (name == "s3") return s3();
    if (name == "d4") return d4();
    if (name == "q8") return q8();
    throw Error("BadFormat", "unknown builtin group " + name);
}

const std::vector<std::string>& builtin_group_names() {
    static const std::vector<std::string> names = {"z1", "z2", "z3", "z4",    "z5", "z6",
                                                   "z7", "z8", "klein", "s3", "d4", "q8"};
    return names;
}

} // namespace frobdet
