#pragma once

// Umbrella header for the inset counting library.

#include <inset/block_profile.hpp>
#include <inset/configs.hpp>
#include <inset/core.hpp>
#include <inset/count.hpp>
#include <inset/matrices.hpp>
#include <inset/oracle.hpp>
#include <inset/recurrence.hpp>
#include <inset/sequences.hpp>
#include <inset/verify.hpp>
