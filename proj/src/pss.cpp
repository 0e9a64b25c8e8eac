#include "shellkit/pss.hpp"

#include "shellkit/error.hpp"

namespace shellkit {

PssRowFamily::PssRowFamily(int n, std::vector<std::vector<Row012e>> rows_per_suffix)
	: n_(n), rows_(std::move(rows_per_suffix))
{
	if (static_cast<int>(rows_.size()) != n) {
		throw Error(ErrorKind::InvalidArgument, "need one row list per suffix");
	}
	first_.push_back(0);
	for (int k = 0; k < n; ++k) {
		for (const Row012e& r : rows_[k]) {
			if (r.universe() != IndexSubset::full(n).without(k)) {
				throw Error(ErrorKind::InvalidArgument, "rows of suffix " + std::to_string(k + 1) + " must span [n]\\{k}");
			}
			FlatRow f{r.zeros().bits(), r.ones().bits(), static_cast<std::uint32_t>(bubbles_.size()), 0};
			for (IndexSubset b : r.bubbles()) {
				bubbles_.push_back(b.bits());
			}
			f.bubble_end = static_cast<std::uint32_t>(bubbles_.size());
			flat_.push_back(f);
		}
		first_.push_back(static_cast<std::uint32_t>(flat_.size()));
	}
}

std::size_t PssRowFamily::row_count() const { return flat_.size(); }

BigCount PssRowFamily::pss_count(int k) const { return total_cardinality(rows_[k]); }

BigCount PssRowFamily::pss_count() const
{
	BigCount total = 0;
	for (int k = 0; k < n_; ++k) {
		total += pss_count(k);
	}
	return total;
}

BigCount PssRowFamily::nonempty_pss_count() const
{
	BigCount total = pss_count();
	for (int k = 0; k < n_; ++k) {
		if (is_pss(IndexSubset(), k)) {
			--total;
		}
	}
	return total;
}

} // namespace shellkit
