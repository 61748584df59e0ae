#include "ess/document.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ess {

using nlohmann::json;

namespace {

[[noreturn]] void reject(const std::string& why) { throw MalformedDocument(why); }

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!obj.is_object()) reject(where + " must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) reject(where + ": unknown key \"" + it.key() + "\"");
}

std::size_t get_count(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) reject(where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_unsigned()) reject(where + ": \"" + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

Matrix get_matrix(const json& obj, const std::string& where, const std::string& key,
                  std::size_t rows, std::size_t cols) {
    if (!obj.contains(key)) reject(where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != rows * cols)
        reject(where + ": \"" + key + "\" must be a row-major array of " +
               std::to_string(rows * cols) + " scalar strings");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (!v[i].is_string()) reject(where + ": \"" + key + "\" entries must be strings");
        m.at(i / cols, i % cols) = parse_scalar(v[i].get<std::string>());
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(to_string(m.at(i, j)));
    return a;
}

} // namespace

Scalar parse_scalar(const std::string& text) {
    auto digits_ok = [](const std::string& s) {
        if (s.empty()) return false;
        if (s[0] == '0' && s.size() > 1) return false; // no leading zeros
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string t = text;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    std::string num = t, den;
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!digits_ok(num) || (!den.empty() && !digits_ok(den)))
        reject("bad scalar \"" + text + "\"");
    if (neg && num == "0") reject("bad scalar \"" + text + "\" (negative zero)");
    if (!den.empty()) {
        if (den == "1") reject("bad scalar \"" + text + "\" (denominator 1 must be omitted)");
        if (num == "0") reject("bad scalar \"" + text + "\" (zero with a denominator)");
        mpz_class n(num), d(den), g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1) reject("bad scalar \"" + text + "\" (not in lowest terms)");
    }
    Scalar s(text);
    return s;
}

Document parse_document(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        reject(std::string("invalid JSON: ") + e.what());
    }
    check_keys(root, "document",
               {"scalar_field", "symplectic_space", "pair", "morphism", "alpha"});
    if (!root.contains("scalar_field") || root.at("scalar_field") != "rational")
        reject("document: \"scalar_field\" must be \"rational\"");
    if (!root.contains("symplectic_space")) reject("document: missing \"symplectic_space\"");

    const json& sp = root.at("symplectic_space");
    check_keys(sp, "symplectic_space", {"dim", "gram"});
    std::size_t dim = get_count(sp, "symplectic_space", "dim");
    Matrix gram = get_matrix(sp, "symplectic_space", "gram", dim, dim);
    if (dim % 2 != 0) reject("symplectic_space: dim must be even");
    if (!gram.is_skew_symmetric()) reject("symplectic_space: gram not skew-symmetric");
    if (dim > 0 && rank(gram) != dim) reject("symplectic_space: gram degenerate");
    SymplecticSpace space(dim, gram);

    std::optional<SymplecticSymmetricPair> pair;
    if (root.contains("pair")) {
        const json& pj = root.at("pair");
        check_keys(pj, "pair", {"dim_k", "dim_p", "brackets", "omega"});
        std::size_t dk = get_count(pj, "pair", "dim_k");
        std::size_t dp = get_count(pj, "pair", "dim_p");
        std::size_t n = dk + dp;
        Matrix omega = get_matrix(pj, "pair", "omega", dp, dp);
        if (!pj.contains("brackets") || !pj.at("brackets").is_array())
            reject("pair: \"brackets\" must be an array of [i, j, coeffs] triples");
        std::vector<Matrix> table(n * n, Matrix(n, 1));
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const json& tr : pj.at("brackets")) {
            if (!tr.is_array() || tr.size() != 3 || !tr[0].is_number_unsigned() ||
                !tr[1].is_number_unsigned() || !tr[2].is_array())
                reject("pair: each bracket must be [i, j, coeff-array]");
            std::size_t i = tr[0].get<std::size_t>(), j = tr[1].get<std::size_t>();
            if (i >= j || j >= n) reject("pair: bracket indices must satisfy i < j < dim");
            if (!seen.insert({i, j}).second) reject("pair: duplicate bracket entry");
            if (tr[2].size() != n) reject("pair: bracket coefficient vector has wrong length");
            Matrix v(n, 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (!tr[2][r].is_string()) reject("pair: bracket coefficients must be strings");
                v.at(r, 0) = parse_scalar(tr[2][r].get<std::string>());
            }
            table[i * n + j] = v;
            table[j * n + i] = -v;
        }
        SymplecticSymmetricPair p{SymmetricPair{LieAlgebra(n, std::move(table)), dk, dp}, omega};
        auto bad = p.validate();
        if (!bad.empty()) reject("pair: " + bad.front());
        pair = std::move(p);
    }

    std::optional<ExtrinsicMorphism> morphism;
    if (root.contains("morphism")) {
        if (!pair) reject("morphism requires a pair");
        const json& mj = root.at("morphism");
        check_keys(mj, "morphism", {"Lambda", "tau"});
        std::size_t n = pair->pair.algebra.dim();
        if (!mj.contains("Lambda") || !mj.at("Lambda").is_array() || mj.at("Lambda").size() != n)
            reject("morphism: \"Lambda\" must hold one matrix per g basis vector");
        std::vector<Matrix> Lambda;
        for (std::size_t b = 0; b < n; ++b) {
            json wrap;
            wrap["m"] = mj.at("Lambda")[b];
            Lambda.push_back(get_matrix(wrap, "morphism Lambda", "m", dim, dim));
        }
        Matrix tau = get_matrix(mj, "morphism", "tau", dim, n);
        try {
            morphism.emplace(*pair, space, std::move(Lambda), std::move(tau));
        } catch (const std::invalid_argument& e) {
            reject(std::string("morphism: ") + e.what());
        }
    }

    std::optional<FundamentalFormData> alpha;
    if (root.contains("alpha")) {
        const json& aj = root.at("alpha");
        check_keys(aj, "alpha", {"dim_w1", "dim_w2", "gram_w1", "gram_w2", "tensor"});
        std::size_t d1 = get_count(aj, "alpha", "dim_w1");
        std::size_t d2 = get_count(aj, "alpha", "dim_w2");
        Matrix g1 = get_matrix(aj, "alpha", "gram_w1", d1, d1);
        Matrix g2 = get_matrix(aj, "alpha", "gram_w2", d2, d2);
        auto check_gram = [&](const Matrix& g, std::size_t d, const char* which) {
            if (d % 2 != 0) reject(std::string("alpha: ") + which + " dimension must be even");
            if (!g.is_skew_symmetric()) reject(std::string("alpha: ") + which + " not skew-symmetric");
            if (d > 0 && rank(g) != d) reject(std::string("alpha: ") + which + " degenerate");
        };
        check_gram(g1, d1, "gram_w1");
        check_gram(g2, d2, "gram_w2");
        if (space.dim() != d1 + d2) reject("alpha: dim_w1 + dim_w2 must equal the space dimension");
        // the ambient space must be the block sum of the two grams
        Matrix expect(d1 + d2, d1 + d2);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) expect.at(i, j) = g1.at(i, j);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d2; ++j) expect.at(d1 + i, d1 + j) = g2.at(i, j);
        if (space.gram() != expect)
            reject("alpha: symplectic_space gram must be the block sum gram_w1 (+) gram_w2");
        if (!aj.contains("tensor") || !aj.at("tensor").is_array())
            reject("alpha: \"tensor\" must be an array of [i, j, coeffs] triples");
        std::vector<Matrix> vals(d1 * d1, Matrix(d2, 1));
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const json& tr : aj.at("tensor")) {
            if (!tr.is_array() || tr.size() != 3 || !tr[0].is_number_unsigned() ||
                !tr[1].is_number_unsigned() || !tr[2].is_array())
                reject("alpha: each tensor entry must be [i, j, coeff-array]");
            std::size_t i = tr[0].get<std::size_t>(), j = tr[1].get<std::size_t>();
            if (i > j || j >= d1) reject("alpha: tensor indices must satisfy i <= j < dim_w1");
            if (!seen.insert({i, j}).second) reject("alpha: duplicate tensor entry");
            if (tr[2].size() != d2) reject("alpha: tensor value has wrong length");
            Matrix v(d2, 1);
            for (std::size_t r = 0; r < d2; ++r) {
                if (!tr[2][r].is_string()) reject("alpha: tensor coefficients must be strings");
                v.at(r, 0) = parse_scalar(tr[2][r].get<std::string>());
            }
            vals[i * d1 + j] = v;
            vals[j * d1 + i] = v;
        }
        alpha = FundamentalFormData{SymplecticSpace(d1, g1), SymplecticSpace(d2, g2),
                                    std::move(vals)};
    }
    return Document{std::move(space), std::move(pair), std::move(morphism), std::move(alpha)};
}

std::string serialize_document(const Document& doc) {
    json root;
    root["scalar_field"] = "rational";
    root["symplectic_space"] = {{"dim", doc.space.dim()},
                                {"gram", matrix_to_json(doc.space.gram())}};
    if (doc.pair) {
        const auto& p = *doc.pair;
        std::size_t n = p.pair.algebra.dim();
        json brackets = json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Matrix& v = p.pair.algebra.bracket_basis(i, j);
                if (v.is_zero()) continue;
                json coeffs = json::array();
                for (std::size_t r = 0; r < n; ++r) coeffs.push_back(to_string(v.at(r, 0)));
                brackets.push_back(json::array({i, j, coeffs}));
            }
        root["pair"] = {{"dim_k", p.pair.dim_k},
                        {"dim_p", p.pair.dim_p},
                        {"brackets", brackets},
                        {"omega", matrix_to_json(p.omega)}};
    }
    if (doc.morphism) {
        json lam = json::array();
        for (const Matrix& L : doc.morphism->Lambda()) lam.push_back(matrix_to_json(L));
        root["morphism"] = {{"Lambda", lam}, {"tau", matrix_to_json(doc.morphism->tau())}};
    }
    if (doc.alpha) {
        const auto& a = *doc.alpha;
        std::size_t d1 = a.w1space.dim(), d2 = a.w2space.dim();
        json tensor = json::array();
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = i; j < d1; ++j) {
                if (a.at(i, j).is_zero()) continue;
                json coeffs = json::array();
                for (std::size_t r = 0; r < d2; ++r) coeffs.push_back(to_string(a.at(i, j).at(r, 0)));
                tensor.push_back(json::array({i, j, coeffs}));
            }
        root["alpha"] = {{"dim_w1", d1},
                         {"dim_w2", d2},
                         {"gram_w1", matrix_to_json(a.w1space.gram())},
                         {"gram_w2", matrix_to_json(a.w2space.gram())},
                         {"tensor", tensor}};
    }
    return root.dump(2) + "\n";
}

Document document_from_morphism(const ExtrinsicMorphism& m) {
    return Document{m.space(), m.pair(), m, std::nullopt};
}

Document document_from_entry(const CatalogEntry& e) {
    if (e.morphism) return document_from_morphism(*e.morphism);
    return Document{e.pair.p_space(), e.pair, std::nullopt, std::nullopt};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedDocument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace ess
