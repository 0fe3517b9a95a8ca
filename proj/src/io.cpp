#include "lscoinv/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace lscoinv {

namespace {

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer coefficient, got " + j.dump());
}

std::string family_string(Family f) { return std::string(1, family_char(f)); }

std::vector<Label> labels_from_json(const json& j) {
    std::vector<Label> out;
    for (const auto& e : j) out.push_back(e.get<Label>());
    return out;
}

template <typename Entry>
json labeled_matrix_to_json(const LabeledMatrix<Entry>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Entry>
LabeledMatrix<Entry> labeled_matrix_from_json(const std::vector<Label>& labels, const json& rows) {
    LabeledMatrix<Entry> m(labels);
    if (rows.size() != labels.size()) throw std::invalid_argument("matrix row count does not match labels");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (rows[i].size() != labels.size()) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < labels.size(); ++j) m(i, j) = rows[i][j].get<Entry>();
    }
    return m;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

template <typename Entry>
std::string to_csv(const LabeledMatrix<Entry>& m) {
    std::ostringstream os;
    os << "label";
    for (const auto& l : m.labels()) os << ',' << csv_quote(l.to_string());
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << csv_quote(m.labels()[i].to_string());
        for (std::size_t j = 0; j < m.size(); ++j) os << ',' << csv_quote(m(i, j).to_string());
        os << '\n';
    }
    return os.str();
}

template <typename Entry>
std::string to_markdown(const LabeledMatrix<Entry>& m) {
    std::ostringstream os;
    os << "| |";
    for (const auto& l : m.labels()) os << ' ' << l.to_string() << " |";
    os << "\n|---|";
    for (std::size_t j = 0; j < m.size(); ++j) os << "---|";
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << "| " << m.labels()[i].to_string() << " |";
        for (std::size_t j = 0; j < m.size(); ++j) os << ' ' << m(i, j).to_string() << " |";
        os << '\n';
    }
    return os.str();
}

}  // namespace

void to_json(json& j, const LaurentPoly& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = integer_to_json(c);
    j = json{{"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, LaurentPoly& p) {
    LaurentPoly::Terms terms;
    for (const auto& [key, value] : j.at("coeffs").items()) {
        std::size_t used = 0;
        const long long e = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
        terms[e] += integer_from_json(value);
    }
    p = LaurentPoly(std::move(terms));
}

void to_json(json& j, const RatFunc& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RatFunc& f) {
    f = RatFunc(j.at("num").get<LaurentPoly>(), j.at("den").get<LaurentPoly>());
}

void to_json(json& j, const Label& l) {
    if (l.family == Family::A)
        j = json{{"partition", l.alpha}};
    else
        j = json{{"alpha", l.alpha}, {"beta", l.beta}};
}

void from_json(const json& j, Label& l) {
    if (j.contains("partition")) {
        l = Label::partition(j.at("partition").get<Partition>());
    } else {
        l = Label::bipartition(j.at("alpha").get<Partition>(), j.at("beta").get<Partition>());
    }
    if (!is_partition(l.alpha) || !is_partition(l.beta)) throw std::invalid_argument("label is not a partition");
}

json char_table_to_json(const CharTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes) {
        json cj;
        if (t.type.family == Family::A)
            cj["cycles"] = c.positive;
        else
            cj["cycles"] = json{{"positive", c.positive}, {"negative", c.negative}};
        cj["size"] = c.size;
        classes.push_back(std::move(cj));
    }
    return json{{"family", family_string(t.type.family)},
                {"rank", t.type.rank},
                {"labels", t.labels},
                {"classes", std::move(classes)},
                {"values", t.values}};
}

CharTable char_table_from_json(const json& j) {
    CharTable t;
    t.type = WeylType{parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    t.type.validate();
    t.labels = labels_from_json(j.at("labels"));
    for (const auto& cj : j.at("classes")) {
        ConjClass c;
        const auto& cycles = cj.at("cycles");
        if (t.type.family == Family::A) {
            c.positive = cycles.get<Partition>();
        } else {
            c.positive = cycles.at("positive").get<Partition>();
            c.negative = cycles.at("negative").get<Partition>();
        }
        c.size = cj.at("size").get<std::int64_t>();
        t.classes.push_back(std::move(c));
    }
    t.values = j.at("values").get<std::vector<std::vector<std::int64_t>>>();
    if (t.values.size() != t.labels.size()) throw std::invalid_argument("character table row count mismatch");
    for (const auto& row : t.values)
        if (row.size() != t.classes.size()) throw std::invalid_argument("character table column count mismatch");
    return t;
}

json poset_to_json(const OrbitPoset& p) {
    json leq = json::array();
    for (const auto& row : p.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        leq.push_back(std::move(r));
    }
    return json{{"family", family_string(p.type.family)},
                {"rank", p.type.rank},
                {"labels", p.labels},
                {"d", p.d},
                {"leq", std::move(leq)},
                {"total_order", p.total_order}};
}

OrbitPoset poset_from_json(const json& j) {
    OrbitPoset p;
    p.type = WeylType{parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    p.type.validate();
    p.labels = labels_from_json(j.at("labels"));
    p.d = j.at("d").get<std::vector<int>>();
    for (const auto& row : j.at("leq")) {
        std::vector<bool> r;
        for (const auto& v : row) r.push_back(v.get<int>() != 0);
        p.leq.push_back(std::move(r));
    }
    p.total_order = j.at("total_order").get<std::vector<std::size_t>>();
    const std::size_t n = p.labels.size();
    if (p.d.size() != n || p.leq.size() != n || p.total_order.size() != n)
        throw std::invalid_argument("poset field sizes disagree");
    for (const auto& row : p.leq)
        if (row.size() != n) throw std::invalid_argument("poset leq is not square");
    return p;
}

json matrix_to_json(const GradedMatrix& m) { return labeled_matrix_to_json(m); }
json matrix_to_json(const PolyMatrix& m) { return labeled_matrix_to_json(m); }

json ls_result_to_json(const LSResult& r) {
    return json{{"labels", r.labels()},
                {"K", labeled_matrix_to_json(r.K)},
                {"D", r.D},
                {"kostka", labeled_matrix_to_json(r.kostka)}};
}

LSResult ls_result_from_json(const json& j) {
    LSResult r;
    const auto labels = labels_from_json(j.at("labels"));
    r.K = labeled_matrix_from_json<RatFunc>(labels, j.at("K"));
    r.D = j.at("D").get<std::vector<RatFunc>>();
    if (r.D.size() != labels.size()) throw std::invalid_argument("D length does not match labels");
    r.kostka = labeled_matrix_from_json<LaurentPoly>(labels, j.at("kostka"));
    return r;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"subject", c.subject},
                              {"status", c.pass ? "pass" : "fail"},
                              {"detail", c.detail}});
    return json{{"family", r.family}, {"rank", r.rank}, {"checks", std::move(checks)}};
}

std::string matrix_to_csv(const PolyMatrix& m) { return to_csv(m); }
std::string matrix_to_csv(const GradedMatrix& m) { return to_csv(m); }
std::string matrix_to_markdown(const PolyMatrix& m) { return to_markdown(m); }
std::string matrix_to_markdown(const GradedMatrix& m) { return to_markdown(m); }

}  // namespace lscoinv
