#include "hserre/face.hpp"

#include <algorithm>
#include <utility>

namespace hserre {

Face::Face(std::initializer_list<int> vertices) {
    for (int v : vertices)
        mask_ |= std::uint64_t{1} << (v - 1);
}

Face::Face(const std::vector<int>& vertices) {
    for (int v : vertices)
        mask_ |= std::uint64_t{1} << (v - 1);
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t rest = mask_; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

std::string Face::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

void sort_unique(std::vector<Face>& faces) {
    // (size, same_size_key) orders exactly as face_less.
    std::vector<std::pair<int, std::uint64_t>> keys;
    keys.reserve(faces.size());
    for (Face f : faces)
        keys.emplace_back(f.size(), same_size_key(f));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    faces.clear();
    for (const auto& [size, key] : keys)
        faces.emplace_back(reverse_bits(key));
}

} // namespace hserre
