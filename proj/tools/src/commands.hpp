#pragma once

#include "settings.hpp"

#include <optional>
#include <string>

namespace mlcech::cli {

enum class Format { json, csv };

struct P1Request {
    std::optional<std::string> divisor;
    std::optional<std::string> equivalent;
    bool omega1 = false;
};

struct SweepRequest {
    std::string support = "0,1,-1,i,2,inf";
    long range = 3;
    long max_degree = 8;
    long samples = 500;
    unsigned long seed = 1;
};

struct PlaneRequest {
    std::string domain;
    std::string poles;
    std::optional<long> stages;
    std::optional<std::string> grid;
};

struct TorusRequest {
    std::string lattice;
    std::string parts;
    bool check = false;
};

// Each returns the complete report text.
std::string cech_command(const std::string& input, const Settings& s, Format f);
std::string p1_command(const P1Request& r, const Settings& s, Format f);
std::string rr_sweep_command(const SweepRequest& r, const Settings& s, Format f);
std::string ml_p1_command(const std::string& parts, const Settings& s, Format f);
std::string plane_ml_command(const PlaneRequest& r, const Settings& s, Format f);
std::string torus_ml_command(const TorusRequest& r, const Settings& s, Format f);
std::string tables_command(long n, Format f);

} // namespace mlcech::cli
