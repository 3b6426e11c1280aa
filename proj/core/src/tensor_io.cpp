#include "tcur/tensor_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

namespace tcur {

static_assert(std::endian::native == std::endian::little,
              "T3D1 io assumes a little-endian host");
static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559,
              "T3D1 io assumes IEEE-754 float64");

namespace {
constexpr char kMagic[4] = {'T', '3', 'D', '1'};
}

Tensor3 read_tensor(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open tensor file: " + path);

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("bad magic in tensor file: " + path);

    std::uint64_t dims[3];
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in) throw FormatError("truncated header in tensor file: " + path);
    for (std::uint64_t d : dims)
        if (d == 0 || d > (std::uint64_t{1} << 32))
            throw FormatError("implausible dimension in tensor file: " + path);

    const std::uint64_t count = dims[0] * dims[1] * dims[2];
    std::vector<double> data(count);
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (!in || static_cast<std::uint64_t>(in.gcount()) != count * sizeof(double))
        throw FormatError("truncated payload in tensor file: " + path);

    Tensor3 out(static_cast<Index>(dims[0]), static_cast<Index>(dims[1]),
                static_cast<Index>(dims[2]), std::move(data));
    if (!out.all_finite())
        throw FormatError("non-finite values in tensor file: " + path);
    return out;
}

void write_tensor(const std::string& path, const Tensor3& x) {
    if (!x.all_finite()) throw FormatError("refusing to write non-finite tensor values");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open tensor file for writing: " + path);

    out.write(kMagic, 4);
    std::uint64_t dims[3] = {static_cast<std::uint64_t>(x.i1()),
                             static_cast<std::uint64_t>(x.i2()),
                             static_cast<std::uint64_t>(x.i3())};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    out.write(reinterpret_cast<const char*>(x.data()),
              static_cast<std::streamsize>(static_cast<std::uint64_t>(x.size()) * sizeof(double)));
    if (!out) throw FormatError("failed writing tensor file: " + path);
}

} // namespace tcur
