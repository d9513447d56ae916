#pragma once

namespace gapcube::detail {

// Drops every memoized prefix (sequence registry and recurrence caches).
void clear_memo_caches();

}  // namespace gapcube::detail
