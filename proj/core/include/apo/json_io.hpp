#pragma once

#include <string>

#include "apo/prony.hpp"
#include "apo/regularization.hpp"
#include "apo/trig.hpp"

namespace apo {

// Wire formats. Numbers are IEEE-754 doubles in decimal text.
//   TrigPolynomial: {"n":int,"a0":num,"coeffs":[[a,b],...]}
//   Apo:            {"mu":int,"valid_degree":int,"terms":[[X,lambda],...]}
//   NodeSet:        {"convention":"Y"|"Z","nodes":[[re,im],...],"weights":[[re,im],...]}

std::string to_json(const TrigPolynomial& p);
std::string to_json(const Apo& op);
std::string to_json(const NodeSet& ns);

TrigPolynomial trig_poly_from_json(const std::string& text);
Apo apo_from_json(const std::string& text);
NodeSet node_set_from_json(const std::string& text);

// Diagnostic reports.
std::string to_json(const SpectrumReport& r);
std::string to_json(const OmegaPerturbReport& r);
std::string to_json(const NonregularResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace apo
