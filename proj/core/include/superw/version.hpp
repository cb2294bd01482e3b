#pragma once

#define SUPERW_VERSION "0.1.0"
