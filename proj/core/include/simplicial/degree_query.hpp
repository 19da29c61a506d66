#pragma once

#include <string>

namespace simplicial {

/// Degree families. Names follow the adjacency they count.
enum class DegreeFamily {
    lower,                  ///< deg^p_L
    strict_lower,           ///< deg^{p*}_L
    lower_step,             ///< deg^{h,p}_L: only (q-h)-simplices
    strict_lower_step,      ///< deg^{h,p*}_L
    upper,                  ///< deg^p_U
    strict_upper,           ///< deg^{p*}_U
    upper_step,             ///< deg^{h,q+h}_U
    strict_upper_step,      ///< deg^{h,(q+h)*}_U
    adjacency,              ///< deg^p_A
    maximal_adjacency,      ///< deg^{p*}_A
    two_param,              ///< deg^{(p1,p2*)}
    two_param_strict,       ///< deg^{(p1*,p2*)}
    maximal_simplicial,     ///< deg^* = deg^*_A + deg^*_U
    maximal_adjacency_sum,  ///< deg^*_A
    strict_upper_sum,       ///< deg^*_U
};

/// A degree family with its parameters. Unused parameters are ignored.
struct DegreeQuery
{
    DegreeFamily family = DegreeFamily::lower;
    int p = 0;
    int h = 0;
    int p1 = 0;
    int p2 = 0;

    static DegreeQuery lower(int p) { return {DegreeFamily::lower, p}; }
    static DegreeQuery strict_lower(int p) { return {DegreeFamily::strict_lower, p}; }
    static DegreeQuery lower_step(int h, int p) { return {DegreeFamily::lower_step, p, h}; }
    static DegreeQuery strict_lower_step(int h, int p) { return {DegreeFamily::strict_lower_step, p, h}; }
    static DegreeQuery upper(int p) { return {DegreeFamily::upper, p}; }
    static DegreeQuery strict_upper(int p) { return {DegreeFamily::strict_upper, p}; }
    static DegreeQuery upper_step(int h) { return {DegreeFamily::upper_step, 0, h}; }
    static DegreeQuery strict_upper_step(int h) { return {DegreeFamily::strict_upper_step, 0, h}; }
    static DegreeQuery adjacency(int p) { return {DegreeFamily::adjacency, p}; }
    static DegreeQuery maximal_adjacency(int p) { return {DegreeFamily::maximal_adjacency, p}; }
    static DegreeQuery two_param(int p1, int p2) { return {DegreeFamily::two_param, 0, 0, p1, p2}; }
    static DegreeQuery two_param_strict(int p1, int p2) { return {DegreeFamily::two_param_strict, 0, 0, p1, p2}; }
    static DegreeQuery maximal_simplicial() { return {DegreeFamily::maximal_simplicial}; }
    static DegreeQuery maximal_adjacency_sum() { return {DegreeFamily::maximal_adjacency_sum}; }
    static DegreeQuery strict_upper_sum() { return {DegreeFamily::strict_upper_sum}; }

    friend bool operator==(const DegreeQuery&, const DegreeQuery&) = default;
};

/// Short tag such as "L(h=1,p=0)" used in reports and diffs.
std::string describe(const DegreeQuery& query);

} // namespace simplicial
