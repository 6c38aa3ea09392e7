#include "knotwave/coeff.hpp"

#include <stdexcept>

namespace knotwave {

namespace {

std::vector<std::string> labels_for(const std::string& tag, std::size_t knot, Flavor fl,
                                    std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(tag + (fl == Flavor::bar ? ".bar" : ".breve") + "[" +
                      std::to_string(knot) + "][" + std::to_string(i) + "]");
    return out;
}

const FunctionList& group(const CenteredBasis& b, std::size_t knot, Flavor fl) {
    return fl == Flavor::bar ? b.bar[knot] : b.breve[knot];
}

}  // namespace

std::vector<CoeffBlock> coeff_blocks(const CenteredBasis& rows, const CenteredBasis& phi1,
                                     std::size_t knot, const std::string& kind) {
    std::vector<CoeffBlock> out;
    auto push = [&](Flavor rf, std::size_t to, Flavor cf) {
        const auto& R = group(rows, knot, rf);
        const auto& C = group(phi1, to, cf);
        if (R.empty() || C.empty()) return;
        CoeffBlock blk;
        blk.kind = kind;
        blk.row_flavor = rf;
        blk.col_flavor = cf;
        blk.from_knot = knot;
        blk.to_knot = to;
        blk.values = gram(R, C);
        blk.row_labels = labels_for(kind == "c" ? "phi0" : "psi", knot, rf, R.size());
        blk.col_labels = labels_for("phi1", to, cf, C.size());
        out.push_back(std::move(blk));
    };
    if (knot > 0) {
        push(Flavor::bar, knot - 1, Flavor::breve);
        push(Flavor::breve, knot - 1, Flavor::breve);  // zero by support; kept for sparsity checks
        push(Flavor::bar, knot - 1, Flavor::bar);
        push(Flavor::breve, knot - 1, Flavor::bar);
    }
    push(Flavor::bar, knot, Flavor::bar);
    push(Flavor::bar, knot, Flavor::breve);
    push(Flavor::breve, knot, Flavor::bar);
    push(Flavor::breve, knot, Flavor::breve);
    return out;
}

std::vector<CoeffBlock> c_blocks(const CenteredBasis& phi0, const CenteredBasis& phi1,
                                 std::size_t knot) {
    return coeff_blocks(phi0, phi1, knot, "c");
}

std::vector<CoeffBlock> d_blocks(const CenteredBasis& psi, const CenteredBasis& phi1,
                                 std::size_t knot) {
    return coeff_blocks(psi, phi1, knot, "d");
}

BEFactor be_factor(const Matrix& c_block) {
    BEFactor f;
    // entries are pairings of unit-norm functions; a block below the rank
    // tolerance is the zero block and factors to nothing
    if (max_abs(c_block) < kRankTol) {
        f.b = Matrix(0, c_block.cols());
        f.e = Matrix(c_block.rows(), 0);
        return f;
    }
    f.b = orthonormal_row_basis(c_block);
    f.e = c_block * f.b.transpose();
    return f;
}

FunctionList rows_to_functions(const Matrix& rows, const CenteredBasis& phi1, std::size_t knot) {
    FunctionList stack;
    if (knot > 0)
        stack.insert(stack.end(), phi1.breve[knot - 1].begin(), phi1.breve[knot - 1].end());
    stack.insert(stack.end(), phi1.bar[knot].begin(), phi1.bar[knot].end());
    stack.insert(stack.end(), phi1.breve[knot].begin(), phi1.breve[knot].end());
    if (rows.cols() != static_cast<Eigen::Index>(stack.size()))
        throw std::invalid_argument("rows_to_functions: width mismatch");
    FunctionList out;
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        std::vector<double> cs(static_cast<std::size_t>(rows.cols()));
        for (Eigen::Index c = 0; c < rows.cols(); ++c) cs[static_cast<std::size_t>(c)] = rows(r, c);
        out.push_back(linear_combination(cs, stack));
    }
    return out;
}

namespace {

Matrix block_or_zero(const CenteredBasis& rows, const CenteredBasis& phi1, std::size_t i,
                     Flavor rf, std::size_t j, Flavor cf) {
    const auto& R = group(rows, i, rf);
    const auto& C = group(phi1, j, cf);
    if (R.empty() || C.empty())
        return Matrix::Zero(static_cast<Eigen::Index>(R.size()),
                            static_cast<Eigen::Index>(C.size()));
    return gram(R, C);
}

}  // namespace

Matrix assemble_M(const CenteredBasis& phi0, const CenteredBasis& phi1, const CenteredBasis& psi,
                  std::size_t ia, std::size_t ib) {
    if (ib < ia || ib - ia < 2)
        throw std::invalid_argument("assemble_M: need at least three knots");
    // fine columns: breve1[ia], then (bar1[c], breve1[c]) for ia < c < ib
    struct Col {
        std::size_t knot;
        Flavor fl;
        std::size_t size;
    };
    std::vector<Col> cols;
    cols.push_back({ia, Flavor::breve, phi1.breve[ia].size()});
    for (std::size_t c = ia + 1; c < ib; ++c) {
        cols.push_back({c, Flavor::bar, phi1.bar[c].size()});
        cols.push_back({c, Flavor::breve, phi1.breve[c].size()});
    }
    Eigen::Index width = 0;
    for (const auto& c : cols) width += static_cast<Eigen::Index>(c.size);

    struct Row {
        const CenteredBasis* basis;  // phi0 or psi; nullptr = alpha row
        std::size_t knot;
        Flavor fl;
    };
    std::vector<Row> rows;
    // alpha_a^+ comes from the b factor of the bar0[ia] x breve1[ia] block
    Matrix alpha_top =
        be_factor(block_or_zero(phi0, phi1, ia, Flavor::bar, ia, Flavor::breve)).b;
    Matrix alpha_bot =
        be_factor(block_or_zero(phi0, phi1, ib, Flavor::bar, ib - 1, Flavor::breve)).b;
    rows.push_back({nullptr, ia, Flavor::bar});
    rows.push_back({&phi0, ia, Flavor::breve});
    for (std::size_t c = ia + 1; c < ib; ++c) {
        rows.push_back({&phi0, c, Flavor::bar});
        rows.push_back({&phi0, c, Flavor::breve});
    }
    rows.push_back({&psi, ia, Flavor::breve});
    for (std::size_t c = ia + 1; c < ib; ++c) {
        rows.push_back({&psi, c, Flavor::bar});
        rows.push_back({&psi, c, Flavor::breve});
    }
    rows.push_back({nullptr, ib, Flavor::bar});

    Eigen::Index height = alpha_top.rows() + alpha_bot.rows();
    for (const auto& r : rows)
        if (r.basis) height += static_cast<Eigen::Index>(group(*r.basis, r.knot, r.fl).size());

    Matrix M = Matrix::Zero(height, width);
    Eigen::Index row0 = 0;
    for (const auto& r : rows) {
        Eigen::Index h;
        if (!r.basis) {
            // alpha rows act on a single fine breve group
            const Matrix& alpha = (r.knot == ia) ? alpha_top : alpha_bot;
            h = alpha.rows();
            Eigen::Index col0 = 0;
            std::size_t target = (r.knot == ia) ? ia : ib - 1;
            for (const auto& c : cols) {
                if (c.knot == target && c.fl == Flavor::breve)
                    M.block(row0, col0, h, alpha.cols()) = alpha;
                col0 += static_cast<Eigen::Index>(c.size);
            }
        } else {
            const auto& R = group(*r.basis, r.knot, r.fl);
            h = static_cast<Eigen::Index>(R.size());
            Eigen::Index col0 = 0;
            for (const auto& c : cols) {
                Eigen::Index w = static_cast<Eigen::Index>(c.size);
                // the displayed band: straddling rows reach the previous
                // breve group and their own bar/breve groups, single-interval
                // rows only their own breve group
                bool inband =
                    r.fl == Flavor::bar
                        ? ((c.knot + 1 == r.knot && c.fl == Flavor::breve) ||
                           c.knot == r.knot)
                        : (c.knot == r.knot && c.fl == Flavor::breve);
                if (inband && h > 0 && w > 0)
                    M.block(row0, col0, h, w) = gram(R, group(phi1, c.knot, c.fl));
                col0 += w;
            }
        }
        row0 += h;
    }
    return M;
}

GhatGtilde ghat_gtilde(const CenteredBasis& phi0, const CenteredBasis& phi1, std::size_t knot) {
    GhatGtilde out;
    if (phi0.bar[knot].empty() || phi1.bar[knot].empty()) return out;
    std::size_t i = knot;
    Matrix cbb = block_or_zero(phi0, phi1, i, Flavor::bar, i, Flavor::bar);
    Matrix c_prev = block_or_zero(phi0, phi1, i, Flavor::bar, i - 1, Flavor::breve);
    Matrix c_here = block_or_zero(phi0, phi1, i, Flavor::bar, i, Flavor::breve);
    Eigen::Index nprev = c_prev.cols(), nbar = cbb.cols(), nhere = c_here.cols();
    Eigen::Index width = nprev + nbar + nhere;

    // residual of the fine straddlers against the coarse ones, as rows
    Matrix hat_raw(nbar, width);
    hat_raw.block(0, 0, nbar, nprev) = -(cbb.transpose() * c_prev);
    hat_raw.block(0, nprev, nbar, nbar) = Matrix::Identity(nbar, nbar) - cbb.transpose() * cbb;
    hat_raw.block(0, nprev + nbar, nbar, nhere) = -(cbb.transpose() * c_here);
    out.ghat = max_abs(hat_raw) < kRankTol ? Matrix(0, width) : orthonormal_row_basis(hat_raw);

    // flip-space rows: the A-space coordinate rows projected off the coarse
    // straddler row and the ghat rows
    Matrix b_prev = be_factor(c_prev).b;
    Matrix b_here = be_factor(c_here).b;
    Matrix flip = Matrix::Zero(b_prev.rows() + b_here.rows(), width);
    flip.block(0, 0, b_prev.rows(), nprev) = b_prev;
    flip.block(b_prev.rows(), nprev + nbar, b_here.rows(), nhere) = b_here;
    Eigen::Index kbar0 = static_cast<Eigen::Index>(phi0.bar[i].size());
    Matrix off = Matrix::Zero(kbar0 + out.ghat.rows(), width);
    off.block(0, 0, kbar0, nprev) = c_prev;
    off.block(0, nprev, kbar0, nbar) = cbb;
    off.block(0, nprev + nbar, kbar0, nhere) = c_here;
    if (out.ghat.rows() > 0) off.block(kbar0, 0, out.ghat.rows(), width) = out.ghat;
    Matrix tilde_raw = flip * (Matrix::Identity(width, width) - off.transpose() * off);
    out.gtilde =
        max_abs(tilde_raw) < kRankTol ? Matrix(0, width) : orthonormal_row_basis(tilde_raw);

    for (std::size_t k = 0; k < static_cast<std::size_t>(nprev); ++k)
        out.col_labels.push_back("phi1.breve[" + std::to_string(i - 1) + "][" +
                                 std::to_string(k) + "]");
    for (std::size_t k = 0; k < static_cast<std::size_t>(nbar); ++k)
        out.col_labels.push_back("phi1.bar[" + std::to_string(i) + "][" + std::to_string(k) +
                                 "]");
    for (std::size_t k = 0; k < static_cast<std::size_t>(nhere); ++k)
        out.col_labels.push_back("phi1.breve[" + std::to_string(i) + "][" + std::to_string(k) +
                                 "]");
    return out;
}

}  // namespace knotwave
