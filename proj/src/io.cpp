#include "knotwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace knotwave {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json window_to_json(const KnotWindow& w) {
    Json j;
    j["knots"] = w.knots;
    j["left_role"] = w.left_role == Role::endpoint ? "endpoint" : "cut";
    j["right_role"] = w.right_role == Role::endpoint ? "endpoint" : "cut";
    return j;
}

Json window_to_json(const TauWindow& w) {
    Json j;
    Json knots = Json::array();
    for (const auto& u : w.scaled) knots.push_back(Json{{"p", u.p}, {"q", u.q}});
    j["knots"] = std::move(knots);
    j["level"] = w.level;
    j["left_role"] = (!w.scaled.empty() && w.scaled.front() == TauNumber{0, 0}) ? "endpoint"
                                                                                : "cut";
    j["right_role"] = "cut";
    return j;
}

Json basis_manifest(const CenteredBasis& basis) {
    Json j;
    j["window"] = window_to_json(basis.window);
    j["normalized"] = basis.normalized;
    j["sign_convention"] = "leading piece highest-degree coefficient nonnegative";
    Json per_knot = Json::array();
    for (std::size_t i = 0; i < basis.knot_count(); ++i) {
        per_knot.push_back(Json{{"knot", basis.window.knots[i]},
                                {"bar", basis.bar[i].size()},
                                {"breve", basis.breve[i].size()}});
    }
    j["per_knot"] = std::move(per_knot);
    j["total_functions"] = basis.total_count();
    return j;
}

Json dimension_report_to_json(const DimensionReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(Json{{"k0", r.k0},
                            {"k1", r.k1},
                            {"kbar0", r.kbar0},
                            {"kbar1", r.kbar1},
                            {"kbreve0", r.kbreve0},
                            {"kbreve1", r.kbreve1},
                            {"m", r.m},
                            {"m_minus", r.m_minus},
                            {"m_plus", r.m_plus},
                            {"dim_a_minus", r.dim_a_minus},
                            {"dim_a_plus", r.dim_a_plus},
                            {"dim_w_hat", r.dim_w_hat},
                            {"dim_w_tilde", r.dim_w_tilde},
                            {"dim_w_bar", r.dim_w_bar()},
                            {"dim_w_breve", r.dim_w_breve},
                            {"dim_t", r.dim_t},
                            {"dim_t_minus", r.dim_t_minus},
                            {"dim_t_plus", r.dim_t_plus},
                            {"dim_u", r.dim_u},
                            {"dim_s", r.dim_s},
                            {"validated", r.validated},
                            {"formulas_ok", r.formulas_ok}});
    }
    Json j;
    j["per_knot"] = std::move(rows);
    j["pass"] = rep.pass;
    j["worst_perp"] = rep.worst_perp;
    j["worst_sum_split"] = rep.worst_sum_split;
    j["worst_equalspace"] = rep.worst_equalspace;
    j["worst_bar_alt"] = rep.worst_bar_alt;
    return j;
}

Json coeff_block_to_json(const CoeffBlock& blk) {
    Json j;
    j["kind"] = blk.kind;
    j["row_flavor"] = blk.row_flavor == Flavor::bar ? "bar" : "breve";
    j["col_flavor"] = blk.col_flavor == Flavor::bar ? "bar" : "breve";
    j["from_knot"] = blk.from_knot;
    j["to_knot"] = blk.to_knot;
    j["row_labels"] = blk.row_labels;
    j["col_labels"] = blk.col_labels;
    j["values"] = matrix_to_json(blk.values);
    return j;
}

Json cd_tables_to_json(const CDTables& tables) {
    Json arr = Json::array();
    for (const auto& blk : tables.blocks) {
        Json j;
        j["knot_class"] = blk.knot_class;
        j["kind"] = blk.kind == 'C' ? "c" : "d";
        j["coarse"] = Json{{"p", blk.coarse.p}, {"q", blk.coarse.q}};
        j["fine"] = Json{{"p", blk.fine.p}, {"q", blk.fine.q}};
        j["row_labels"] = blk.row_labels;
        j["col_labels"] = blk.col_labels;
        j["values"] = matrix_to_json(blk.values);
        arr.push_back(std::move(j));
    }
    Json out;
    out["tables"] = std::move(arr);
    out["note"] = "values are construction outputs; signs follow the library convention";
    return out;
}

std::string sample_csv(const FunctionList& fs, const std::vector<std::string>& names, double lo,
                       double hi, int points) {
    if (points < 2) throw std::invalid_argument("sample_csv: need at least two points");
    if (names.size() != fs.size()) throw std::invalid_argument("sample_csv: name count");
    std::string out = "x";
    for (const auto& n : names) out += "," + n;
    out += "\n";
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * i / (points - 1);
        out += fmt(x);
        for (const auto& f : fs) out += "," + fmt(f.eval(x));
        out += "\n";
    }
    return out;
}

std::string matrix_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels) {
    std::string out;
    if (!col_labels.empty()) {
        out += "row";
        for (const auto& c : col_labels) out += "," + c;
        out += "\n";
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out += (i < static_cast<Eigen::Index>(row_labels.size()) ? row_labels[static_cast<std::size_t>(i)]
                                                                 : std::to_string(i));
        for (Eigen::Index j = 0; j < m.cols(); ++j) out += "," + fmt(m(i, j));
        out += "\n";
    }
    return out;
}

std::string cd_tables_csv(const CDTables& tables) {
    std::string out = "kind,knot_class,coarse_p,coarse_q,fine_p,fine_q,row,col,value\n";
    for (const auto& blk : tables.blocks) {
        for (Eigen::Index i = 0; i < blk.values.rows(); ++i)
            for (Eigen::Index j = 0; j < blk.values.cols(); ++j) {
                out += std::string(1, blk.kind == 'C' ? 'c' : 'd');
                out += "," + blk.knot_class;
                out += "," + std::to_string(blk.coarse.p) + "," + std::to_string(blk.coarse.q);
                out += "," + std::to_string(blk.fine.p) + "," + std::to_string(blk.fine.q);
                out += "," + blk.row_labels[static_cast<std::size_t>(i)];
                out += "," + blk.col_labels[static_cast<std::size_t>(j)];
                out += "," + fmt(blk.values(i, j)) + "\n";
            }
    }
    return out;
}

std::vector<std::string> basis_function_names(const CenteredBasis& basis) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < basis.knot_count(); ++i) {
        for (std::size_t k = 0; k < basis.bar[i].size(); ++k)
            out.push_back("bar[" + std::to_string(i) + "][" + std::to_string(k) + "]");
        for (std::size_t k = 0; k < basis.breve[i].size(); ++k)
            out.push_back("breve[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << contents;
}

}  // namespace knotwave
