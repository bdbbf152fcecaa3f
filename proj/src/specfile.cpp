#include "qlie/specfile.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "qlie/errors.hpp"

namespace qlie {

SpecParseError::SpecParseError(int line, const std::string &msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line)
{
}

namespace {

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct SectionInfo {
    const char *name;
    int arity;
    std::array<const char *, 3> index_names;
    std::array<char, 3> kinds; // 'h' or 'v'
};

const SectionInfo kSections[] = {
    {"C", 3, {"i", "k", "m"}, {'h', 'h', 'h'}},
    {"A", 3, {"i", "mu", "nu"}, {'h', 'v', 'v'}},
    {"gamma", 3, {"mu", "rho", "sigma"}, {'v', 'v', 'v'}},
    {"alpha", 3, {"rho", "i", "k"}, {'v', 'h', 'h'}},
    {"P", 2, {"i", "mu", ""}, {'h', 'v', 0}},
    {"Q", 2, {"mu", "i", ""}, {'v', 'h', 0}},
};

const SectionInfo *find_section(const std::string &name)
{
    for (auto &s : kSections)
        if (name == s.name)
            return &s;
    return nullptr;
}

bool parse_natural(const std::string &s, long &out)
{
    if (s.empty() || s.size() > 9)
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    out = std::stol(s);
    return true;
}

} // namespace

SpecFile parse_spec_text(const std::string &text)
{
    SpecFile f;
    long dims[2] = {-1, -1}; // dim_h, dim_v
    bool dims_ready = false;
    std::string section;
    std::set<std::string> seen_sections;
    std::set<std::pair<std::string, std::vector<long>>> seen_entries;
    bool have_r = false;

    auto ensure_dims = [&](int line) {
        if (dims_ready)
            return;
        if (dims[0] < 0 || dims[1] < 0)
            throw SpecParseError(line, "[bialgebra] must set dim_h and dim_v before any entries");
        f.spec = LieBialgebraSpec::zero(static_cast<std::size_t>(dims[0]), static_cast<std::size_t>(dims[1]));
        dims_ready = true;
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw SpecParseError(lineno, "malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "bialgebra" && section != "r" && !find_section(section))
                throw SpecParseError(lineno, "unknown section [" + section + "]");
            if (!seen_sections.insert(section).second)
                throw SpecParseError(lineno, "duplicate section [" + section + "]");
            if (section == "r" || section == "P" || section == "Q")
                have_r = true;
            if (section != "bialgebra")
                ensure_dims(lineno);
            continue;
        }
        if (section.empty())
            throw SpecParseError(lineno, "entry outside any section");

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SpecParseError(lineno, "expected '='");
        std::string lhs = trim(line.substr(0, eq)), rhs = trim(line.substr(eq + 1));

        if (section == "bialgebra") {
            if (dims_ready)
                throw SpecParseError(lineno, "dimensions cannot change after entries");
            long value;
            if (!parse_natural(rhs, value))
                throw SpecParseError(lineno, "dimension must be a non-negative integer");
            int slot = lhs == "dim_h" ? 0 : lhs == "dim_v" ? 1 : -1;
            if (slot < 0)
                throw SpecParseError(lineno, "unknown key '" + lhs + "'");
            if (dims[slot] >= 0)
                throw SpecParseError(lineno, "duplicate key '" + lhs + "'");
            dims[slot] = value;
            continue;
        }
        if (section == "r")
            throw SpecParseError(lineno, "[r] takes no entries; use [P] and [Q]");

        const SectionInfo &info = *find_section(section);
        std::istringstream idx(lhs);
        std::vector<long> indices;
        std::string tok;
        while (idx >> tok) {
            long v;
            if (!parse_natural(tok, v))
                throw SpecParseError(lineno, "malformed index '" + tok + "'");
            indices.push_back(v);
        }
        if (static_cast<int>(indices.size()) != info.arity)
            throw SpecParseError(lineno, "[" + section + "] entries need " + std::to_string(info.arity) + " indices");
        for (int k = 0; k < info.arity; ++k) {
            const long limit = info.kinds[k] == 'h' ? dims[0] : dims[1];
            if (indices[k] >= limit)
                throw SpecParseError(lineno, "[" + section + "] index " + info.index_names[k] + " = " +
                                                 std::to_string(indices[k]) + " out of range (" +
                                                 (info.kinds[k] == 'h' ? "dim_h" : "dim_v") + " = " +
                                                 std::to_string(limit) + ")");
        }
        if (!seen_entries.insert({section, indices}).second)
            throw SpecParseError(lineno, "duplicate entry in [" + section + "]");
        Rational value;
        try {
            value = parse_rational(rhs);
        } catch (const std::invalid_argument &e) {
            throw SpecParseError(lineno, e.what());
        }
        auto u = [&](int k) { return static_cast<std::size_t>(indices[k]); };
        if (section == "C")
            f.spec.C(u(0), u(1), u(2)) = value;
        else if (section == "A")
            f.spec.A(u(0), u(1), u(2)) = value;
        else if (section == "gamma")
            f.spec.gamma(u(0), u(1), u(2)) = value;
        else if (section == "alpha")
            f.spec.alpha(u(0), u(1), u(2)) = value;
        else {
            if (!f.r)
                f.r = ClassicalRMatrix::zero(f.spec.dim_h, f.spec.dim_v);
            if (section == "P")
                f.r->P[u(0)][u(1)] = value;
            else
                f.r->Q[u(0)][u(1)] = value;
        }
    }
    ensure_dims(0);
    if (have_r && !f.r)
        f.r = ClassicalRMatrix::zero(f.spec.dim_h, f.spec.dim_v);
    return f;
}

SpecFile parse_spec_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecParseError(0, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

std::string print_spec(const SpecFile &f)
{
    const auto &s = f.spec;
    std::ostringstream out;
    out << "[bialgebra]\ndim_h = " << s.dim_h << "\ndim_v = " << s.dim_v << "\n";
    auto tensor = [&](const char *name, const Tensor3 &t) {
        out << "\n[" << name << "]\n";
        for (std::size_t a = 0; a < t.dim(0); ++a)
            for (std::size_t b = 0; b < t.dim(1); ++b)
                for (std::size_t c = 0; c < t.dim(2); ++c)
                    if (t(a, b, c) != 0)
                        out << a << ' ' << b << ' ' << c << " = " << to_string(t(a, b, c)) << "\n";
    };
    tensor("C", s.C);
    tensor("A", s.A);
    tensor("gamma", s.gamma);
    tensor("alpha", s.alpha);
    if (f.r) {
        out << "\n[r]\n\n[P]\n";
        for (std::size_t i = 0; i < f.r->P.size(); ++i)
            for (std::size_t mu = 0; mu < f.r->P[i].size(); ++mu)
                if (f.r->P[i][mu] != 0)
                    out << i << ' ' << mu << " = " << to_string(f.r->P[i][mu]) << "\n";
        out << "\n[Q]\n";
        for (std::size_t mu = 0; mu < f.r->Q.size(); ++mu)
            for (std::size_t i = 0; i < f.r->Q[mu].size(); ++i)
                if (f.r->Q[mu][i] != 0)
                    out << mu << ' ' << i << " = " << to_string(f.r->Q[mu][i]) << "\n";
    }
    return out.str();
}

void write_spec_file(const std::string &path, const SpecFile &f)
{
    std::ofstream out(path);
    if (!out)
        throw StructuralError("cannot write " + path);
    out << print_spec(f);
}

} // namespace qlie
