#include "continuum/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"
#include "continuum/pattern_io.hpp"

namespace continuum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Plain PBM/PGM reader, ASCII and binary variants.
struct PnmImage {
    int magic = 0; // 1, 2, 4 or 5
    int width = 0;
    int height = 0;
    std::vector<int> samples; // row-major, top row first
};

void skip_space_and_comments(std::istream& in) {
    while (true) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_pnm_int(std::istream& in, const std::string& what) {
    skip_space_and_comments(in);
    int value = 0;
    if (!(in >> value))
        throw InputError("image: failed to read " + what);
    return value;
}

PnmImage read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open image file '" + path + "'");
    char p = 0;
    in.get(p);
    if (p != 'P')
        throw InputError("image: not a PBM/PGM file");
    PnmImage img;
    in >> img.magic;
    if (img.magic != 1 && img.magic != 2 && img.magic != 4 && img.magic != 5)
        throw InputError("image: only P1/P2/P4/P5 are supported");
    img.width = read_pnm_int(in, "width");
    img.height = read_pnm_int(in, "height");
    int maxval = 1;
    if (img.magic == 2 || img.magic == 5) {
        maxval = read_pnm_int(in, "maxval");
        if (maxval < 1 || maxval > 255)
            throw InputError("image: maxval must be between 1 and 255");
    }
    if (img.width < 1 || img.height < 1)
        throw InputError("image: bad dimensions");
    const std::size_t count =
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    img.samples.reserve(count);

    if (img.magic == 1) {
        while (img.samples.size() < count) {
            const int c = in.get();
            if (c == EOF)
                throw InputError("image: truncated P1 data");
            if (c == '0' || c == '1')
                img.samples.push_back(c - '0');
            else if (c == '#') {
                std::string line;
                std::getline(in, line);
            } else if (!std::isspace(c))
                throw InputError("image: unexpected character in P1 data");
        }
    } else if (img.magic == 2) {
        for (std::size_t i = 0; i < count; ++i)
            img.samples.push_back(read_pnm_int(in, "P2 sample"));
    } else if (img.magic == 4) {
        in.get(); // single whitespace after the header
        const int row_bytes = (img.width + 7) / 8;
        for (int y = 0; y < img.height; ++y) {
            std::vector<char> row(static_cast<std::size_t>(row_bytes));
            if (!in.read(row.data(), row_bytes))
                throw InputError("image: truncated P4 data");
            for (int x = 0; x < img.width; ++x) {
                const int byte = static_cast<unsigned char>(row[static_cast<std::size_t>(x / 8)]);
                img.samples.push_back((byte >> (7 - x % 8)) & 1);
            }
        }
    } else {
        in.get();
        for (std::size_t i = 0; i < count; ++i) {
            const int c = in.get();
            if (c == EOF)
                throw InputError("image: truncated P5 data");
            img.samples.push_back(c);
        }
    }
    return img;
}

} // namespace

ordered_json complex_to_json(const Complex& cx) {
    ordered_json j;
    const AdjacencyPattern& p = cx.pattern();
    const auto builtin = builtin_pattern(p.name());
    if (builtin && *builtin == p)
        j["pattern"] = p.name();
    else
        j["pattern"] = pattern_to_json(p);
    j["depth"] = cx.depth();

    // Canonical form: the most frequent color is the default (ties go to
    // the smaller color), every other cell is listed.
    std::map<int, std::uint64_t> frequency;
    for (std::uint64_t i = 0; i < cx.cell_node_count(); ++i)
        ++frequency[cx.color_of_index(i)];
    int default_color = Complex::kWhite;
    std::uint64_t best = 0;
    for (const auto& [color, n] : frequency)
        if (n > best) {
            best = n;
            default_color = color;
        }
    j["default"] = default_color;
    ordered_json colors = ordered_json::object();
    for (std::uint64_t i = 0; i < cx.cell_node_count(); ++i)
        if (cx.color_of_index(i) != default_color)
            colors[format_cell(cx.cell(i), p.alphabet())] = cx.color_of_index(i);
    j["colors"] = std::move(colors);
    j["palette"] = cx.palette();
    return j;
}

Complex complex_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("complex definition must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::set<std::string> allowed = {"pattern", "depth", "default", "colors",
                                                      "palette"};
        if (!allowed.contains(it.key()))
            throw InputError("unknown field '" + it.key() + "' in complex definition");
    }
    if (!j.contains("pattern") || !j.contains("depth"))
        throw InputError("complex definition needs 'pattern' and 'depth'");
    AdjacencyPattern pattern = pattern_from_json_ref(j.at("pattern"));
    const int depth = j.at("depth").get<int>();
    if (depth < 1)
        throw InputError("complex depth must be at least 1");

    int default_color = Complex::kWhite;
    if (j.contains("default"))
        default_color = j.at("default").get<int>();
    int palette = 2;
    if (j.contains("palette"))
        palette = j.at("palette").get<int>();

    const std::uint64_t n = cell_count(pattern.alphabet_size(), depth);
    std::vector<std::uint8_t> colors(n, static_cast<std::uint8_t>(default_color));
    if (j.contains("colors")) {
        const auto& entries = j.at("colors");
        if (!entries.is_object())
            throw InputError("'colors' must map cell words to colors");
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            const Cell c = parse_cell(it.key(), pattern.alphabet());
            if (c.depth() != depth)
                throw InputError("cell '" + it.key() + "' does not have depth " +
                                 std::to_string(depth));
            const int color = it.value().get<int>();
            if (color < 1 || color > 255)
                throw InputError("color out of range for cell '" + it.key() + "'");
            colors[cell_index(c, pattern.alphabet_size())] = static_cast<std::uint8_t>(color);
        }
    }
    palette = std::max(palette, static_cast<int>(*std::max_element(colors.begin(), colors.end())));
    return Complex(std::move(pattern), depth, std::move(colors), palette);
}

std::string save_complex(const Complex& cx) { return complex_to_json(cx).dump(2) + "\n"; }

Complex parse_complex(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("complex file is not valid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open complex file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_complex(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Complex complex_from_image(const std::string& path) {
    const PnmImage img = read_pnm(path);
    if (img.width != img.height)
        throw InputError("image must be square, got " + std::to_string(img.width) + "x" +
                         std::to_string(img.height));
    int depth = 0;
    while ((1 << depth) < img.width)
        ++depth;
    if ((1 << depth) != img.width)
        throw InputError("image side must be a power of two, got " + std::to_string(img.width));
    if (depth < 1)
        throw InputError("image must be at least 2x2");

    AdjacencyPattern pattern = euclid(2);
    const std::uint64_t n = cell_count(4, depth);
    std::vector<std::uint8_t> colors(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Cell c = index_cell(i, 4, depth);
        int x = 0, y = 0;
        for (int d = 0; d < depth; ++d) {
            x = (x << 1) | (c[d] & 1);
            y = (y << 1) | ((c[d] >> 1) & 1);
        }
        const int row = img.height - 1 - y; // image rows run top to bottom
        const int sample = img.samples[static_cast<std::size_t>(row) *
                                           static_cast<std::size_t>(img.width) +
                                       static_cast<std::size_t>(x)];
        colors[i] = sample == 0 ? Complex::kBlack : Complex::kWhite;
    }
    return Complex(std::move(pattern), depth, std::move(colors), 2);
}

} // namespace continuum
