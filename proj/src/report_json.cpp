#include "report_json.hpp"

namespace etaq {

Json to_json(const VerifyReport& r)
{
	Json j;
	j["kind"] = "verify";
	j["name"] = r.name;
	j["trunc"] = r.trunc;
	j["passed"] = r.passed;
	if (r.first_mismatch) {
		j["first_mismatch"] = Json{{"index", r.first_mismatch->index},
		                           {"lhs", r.first_mismatch->lhs},
		                           {"rhs", r.first_mismatch->rhs}};
	}
	return j;
}

Json chain_json(const std::string& name, std::uint64_t trunc,
                const std::vector<VerifyReport>& links)
{
	Json j;
	j["kind"] = "proof";
	j["name"] = name;
	j["trunc"] = trunc;
	bool passed = true;
	Json arr = Json::array();
	for (const auto& link : links) {
		passed = passed && link.passed;
		arr.push_back(to_json(link));
	}
	j["passed"] = passed;
	j["links"] = arr;
	return j;
}

Json to_json(const TheoremScan& r)
{
	Json j;
	j["kind"] = "theorem";
	j["expr"] = r.expr;
	j["trunc"] = r.trunc;
	j["passed"] = r.passed;
	if (r.first_violation) j["first_violation"] = *r.first_violation;
	return j;
}

Json to_json(const DensityReport& r)
{
	Json j;
	j["kind"] = "density";
	j["expr"] = r.expr;
	j["trunc"] = r.trunc;
	j["modulus"] = r.modulus;
	j["total_odd"] = r.total_odd;
	j["odd_fraction"] = r.odd_fraction;
	Json classes = Json::array();
	for (const auto& c : r.classes) {
		classes.push_back(Json{{"residue", c.residue},
		                       {"class_size", c.class_size},
		                       {"odd_count", c.odd_count},
		                       {"odd_fraction", c.odd_fraction}});
	}
	j["classes"] = classes;
	Json cps = Json::array();
	for (const auto& c : r.checkpoints) {
		cps.push_back(Json{{"upto", c.upto},
		                   {"odd_count", c.odd_count},
		                   {"odd_fraction", c.odd_fraction}});
	}
	j["checkpoints"] = cps;
	return j;
}

const char* ap_status_name(APStatus s)
{
	switch (s) {
	case APStatus::odd_witness: return "odd_witness";
	case APStatus::even_up_to_n: return "even_up_to_n";
	case APStatus::insufficient_data: return "insufficient_data";
	}
	return "?";
}

Json to_json(const APReport& r)
{
	Json j;
	j["kind"] = "ap";
	j["expr"] = r.expr;
	j["trunc"] = r.trunc;
	j["max_modulus"] = r.max_modulus;
	std::uint64_t even_classes = 0;
	Json rows = Json::array();
	for (const auto& w : r.witnesses) {
		Json row;
		row["modulus"] = w.modulus;
		row["residue"] = w.residue;
		row["status"] = ap_status_name(w.status);
		if (w.status == APStatus::odd_witness)
			row["witness"] = w.witness;
		else if (w.status == APStatus::even_up_to_n)
			++even_classes;
		row["subsumed"] = w.subsumed;
		rows.push_back(std::move(row));
	}
	j["even_classes"] = even_classes;
	j["witnesses"] = rows;
	return j;
}

Json to_json(const EquiReport& r)
{
	Json j;
	j["kind"] = "equidistribution";
	j["expr"] = r.expr;
	j["modulus"] = r.modulus;
	j["residue"] = r.residue;
	j["trunc"] = r.trunc;
	j["class_size"] = r.class_size;
	j["odd_count"] = r.odd_count;
	j["odd_fraction"] = r.odd_fraction;
	j["max_deviation"] = r.max_deviation;
	Json cps = Json::array();
	for (const auto& c : r.checkpoints) {
		cps.push_back(Json{{"upto", c.upto},
		                   {"class_size", c.class_size},
		                   {"odd_count", c.odd_count},
		                   {"odd_fraction", c.odd_fraction}});
	}
	j["checkpoints"] = cps;
	return j;
}

Json to_json(const LinkReport& r)
{
	Json j;
	j["kind"] = "link";
	j["trunc"] = r.trunc;
	j["passed"] = r.passed;
	j["checked_even"] = r.checked_even;
	j["checked_odd"] = r.checked_odd;
	if (r.first_mismatch) {
		j["first_mismatch"] =
		    Json{{"component", r.first_mismatch->component}, {"m", r.first_mismatch->m}};
	}
	return j;
}

} // namespace etaq
