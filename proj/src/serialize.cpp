#include "gsm/serialize.hpp"

#include <fstream>
#include <sstream>

namespace gsm {

std::string group_to_text(const Group& g) {
    std::ostringstream out;
    out << "group " << g.order << "\n";
    for (int i = 0; i < g.order; ++i) out << (i ? " " : "") << g.labels[i];
    out << "\n";
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) out << (j ? " " : "") << g.table[i][j];
        out << "\n";
    }
    return out.str();
}

GroupPtr group_from_text(const std::string& text, const Caps& caps) {
    std::istringstream in(text);
    std::string keyword;
    int order = 0;
    if (!(in >> keyword >> order) || keyword != "group")
        fail(Errc::syntax_error, "expected 'group <order>' header", 1);
    std::vector<std::string> labels(order);
    for (auto& l : labels)
        if (!(in >> l)) fail(Errc::syntax_error, "missing labels", 2);
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (!(in >> table[i][j]))
                fail(Errc::syntax_error, "missing table entry", 3 + i);
    return build_group(std::move(labels), std::move(table), caps);
}

std::string gset_to_text(const GSet& s, const std::string& group_file) {
    std::ostringstream out;
    out << "gset " << s.size() << " " << group_file << "\n";
    for (int p = 0; p < s.size(); ++p) out << (p ? " " : "") << s.points[p];
    out << "\n";
    for (int g = 0; g < s.group->order; ++g) {
        for (int p = 0; p < s.size(); ++p) out << (p ? " " : "") << s.act[g][p];
        out << "\n";
    }
    return out.str();
}

GSetFile gset_from_text(const std::string& text, const GroupPtr& group) {
    std::istringstream in(text);
    std::string keyword;
    int size = 0;
    GSetFile out;
    if (!(in >> keyword >> size >> out.group_file) || keyword != "gset")
        fail(Errc::syntax_error, "expected 'gset <size> <group-file>' header", 1);
    std::vector<std::string> points(size);
    for (auto& p : points)
        if (!(in >> p)) fail(Errc::syntax_error, "missing point labels", 2);
    std::vector<std::vector<int>> act(group->order, std::vector<int>(size));
    for (int g = 0; g < group->order; ++g)
        for (int p = 0; p < size; ++p)
            if (!(in >> act[g][p]))
                fail(Errc::syntax_error, "missing action entry", 3 + g);
    out.gset = build_gset(group, std::move(points), std::move(act));
    return out;
}

std::string module_to_text(const FiniteModule& m) {
    std::ostringstream out;
    out << "module n=" << m.ring.modulus << " factors=";
    for (size_t i = 0; i < m.factors.size(); ++i) out << (i ? "," : "") << m.factors[i];
    return out.str();
}

FiniteModule module_from_text(const std::string& line) {
    std::istringstream in(line);
    std::string keyword, npart, fpart;
    if (!(in >> keyword >> npart) || keyword != "module" || npart.rfind("n=", 0) != 0)
        fail(Errc::syntax_error, "expected 'module n=<n> factors=...'", 1);
    int n = 0;
    try {
        n = std::stoi(npart.substr(2));
    } catch (...) {
        fail(Errc::syntax_error, "bad modulus '" + npart + "'", 1);
    }
    std::vector<int> factors;
    if (in >> fpart) {
        if (fpart.rfind("factors=", 0) != 0)
            fail(Errc::syntax_error, "expected factors=<d1,d2,...>", 1);
        std::stringstream fs(fpart.substr(8));
        std::string num;
        while (std::getline(fs, num, ','))
            if (!num.empty()) {
                try {
                    factors.push_back(std::stoi(num));
                } catch (...) {
                    fail(Errc::syntax_error, "bad factor '" + num + "'", 1);
                }
            }
    }
    return make_module(n, std::move(factors));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot write " + path);
    out << content;
}

} // namespace gsm
