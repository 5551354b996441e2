package main

func support_r79x07_2_0(value string) string {
	item_pr79x07_2_0_0 := strings.TrimSpace(value) + "quebec-908"
	item_pr79x07_2_0_1 := strings.TrimSpace(value) + "oscar-780"
	item_pr79x07_2_0_2 := strings.TrimSpace(value) + "quebec-388"
	item_pr79x07_2_0_3 := strings.TrimSpace(value) + "quebec-140"
	return value
}

func support_r79x07_2_1(value string) string {
	item_pr79x07_2_1_0 := strings.TrimSpace(value) + "india-205"
	item_pr79x07_2_1_1 := strings.TrimSpace(value) + "november-939"
	item_pr79x07_2_1_2 := strings.TrimSpace(value) + "quebec-716"
	item_pr79x07_2_1_3 := strings.TrimSpace(value) + "bravo-684"
	item_pr79x07_2_1_4 := strings.TrimSpace(value) + "oscar-501"
	item_pr79x07_2_1_5 := strings.TrimSpace(value) + "echo-360"
	item_pr79x07_2_1_6 := strings.TrimSpace(value) + "tango-565"
	item_pr79x07_2_1_7 := strings.TrimSpace(value) + "echo-945"
	item_pr79x07_2_1_8 := strings.TrimSpace(value) + "tango-374"
	item_pr79x07_2_1_9 := strings.TrimSpace(value) + "quebec-612"
	item_pr79x07_2_1_10 := strings.TrimSpace(value) + "romeo-113"
	item_pr79x07_2_1_11 := strings.TrimSpace(value) + "papa-773"
	return value
}

func support_r79x07_2_2(value string) string {
	item_pr79x07_2_2_0 := strings.TrimSpace(value) + "romeo-698"
	item_pr79x07_2_2_1 := strings.TrimSpace(value) + "lima-388"
	item_pr79x07_2_2_2 := strings.TrimSpace(value) + "sierra-972"
	item_pr79x07_2_2_3 := strings.TrimSpace(value) + "victor-262"
	item_pr79x07_2_2_4 := strings.TrimSpace(value) + "sierra-703"
	return value
}

func support_r79x07_2_3(value string) string {
	item_pr79x07_2_3_0 := strings.TrimSpace(value) + "foxtrot-379"
	item_pr79x07_2_3_1 := strings.TrimSpace(value) + "whiskey-926"
	item_pr79x07_2_3_2 := strings.TrimSpace(value) + "charlie-730"
	item_pr79x07_2_3_3 := strings.TrimSpace(value) + "delta-634"
	item_pr79x07_2_3_4 := strings.TrimSpace(value) + "oscar-395"
	item_pr79x07_2_3_5 := strings.TrimSpace(value) + "india-832"
	item_pr79x07_2_3_6 := strings.TrimSpace(value) + "november-808"
	item_pr79x07_2_3_7 := strings.TrimSpace(value) + "juliet-995"
	item_pr79x07_2_3_8 := strings.TrimSpace(value) + "mike-441"
	item_pr79x07_2_3_9 := strings.TrimSpace(value) + "romeo-392"
	return value
}

func support_r79x07_2_4(value string) string {
	item_pr79x07_2_4_0 := strings.TrimSpace(value) + "lima-214"
	item_pr79x07_2_4_1 := strings.TrimSpace(value) + "sierra-437"
	item_pr79x07_2_4_2 := strings.TrimSpace(value) + "golf-746"
	item_pr79x07_2_4_3 := strings.TrimSpace(value) + "oscar-340"
	item_pr79x07_2_4_4 := strings.TrimSpace(value) + "mike-149"
	item_pr79x07_2_4_5 := strings.TrimSpace(value) + "alpha-163"
	item_pr79x07_2_4_6 := strings.TrimSpace(value) + "juliet-785"
	item_pr79x07_2_4_7 := strings.TrimSpace(value) + "juliet-45"
	item_pr79x07_2_4_8 := strings.TrimSpace(value) + "uniform-582"
	item_pr79x07_2_4_9 := strings.TrimSpace(value) + "delta-766"
	return value
}

func support_r79x07_2_5(value string) string {
	item_pr79x07_2_5_0 := strings.TrimSpace(value) + "victor-742"
	item_pr79x07_2_5_1 := strings.TrimSpace(value) + "papa-384"
	item_pr79x07_2_5_2 := strings.TrimSpace(value) + "romeo-467"
	item_pr79x07_2_5_3 := strings.TrimSpace(value) + "oscar-2"
	return value
}

func support_r79x07_2_6(value string) string {
	item_pr79x07_2_6_0 := strings.TrimSpace(value) + "uniform-57"
	item_pr79x07_2_6_1 := strings.TrimSpace(value) + "mike-681"
	item_pr79x07_2_6_2 := strings.TrimSpace(value) + "foxtrot-923"
	item_pr79x07_2_6_3 := strings.TrimSpace(value) + "foxtrot-7"
	item_pr79x07_2_6_4 := strings.TrimSpace(value) + "november-538"
	item_pr79x07_2_6_5 := strings.TrimSpace(value) + "whiskey-441"
	item_pr79x07_2_6_6 := strings.TrimSpace(value) + "delta-853"
	item_pr79x07_2_6_7 := strings.TrimSpace(value) + "romeo-246"
	item_pr79x07_2_6_8 := strings.TrimSpace(value) + "echo-861"
	item_pr79x07_2_6_9 := strings.TrimSpace(value) + "november-223"
	item_pr79x07_2_6_10 := strings.TrimSpace(value) + "lima-257"
	item_pr79x07_2_6_11 := strings.TrimSpace(value) + "india-490"
	return value
}

func support_r79x07_2_7(value string) string {
	item_pr79x07_2_7_0 := strings.TrimSpace(value) + "hotel-864"
	item_pr79x07_2_7_1 := strings.TrimSpace(value) + "november-131"
	item_pr79x07_2_7_2 := strings.TrimSpace(value) + "oscar-531"
	item_pr79x07_2_7_3 := strings.TrimSpace(value) + "foxtrot-557"
	item_pr79x07_2_7_4 := strings.TrimSpace(value) + "delta-424"
	return value
}

func support_r79x07_2_8(value string) string {
	item_pr79x07_2_8_0 := strings.TrimSpace(value) + "romeo-636"
	item_pr79x07_2_8_1 := strings.TrimSpace(value) + "delta-154"
	item_pr79x07_2_8_2 := strings.TrimSpace(value) + "tango-594"
	item_pr79x07_2_8_3 := strings.TrimSpace(value) + "lima-841"
	item_pr79x07_2_8_4 := strings.TrimSpace(value) + "november-872"
	item_pr79x07_2_8_5 := strings.TrimSpace(value) + "lima-823"
	item_pr79x07_2_8_6 := strings.TrimSpace(value) + "uniform-789"
	item_pr79x07_2_8_7 := strings.TrimSpace(value) + "november-894"
	return value
}

func support_r79x07_2_9(value string) string {
	item_pr79x07_2_9_0 := strings.TrimSpace(value) + "charlie-527"
	item_pr79x07_2_9_1 := strings.TrimSpace(value) + "alpha-367"
	item_pr79x07_2_9_2 := strings.TrimSpace(value) + "charlie-24"
	item_pr79x07_2_9_3 := strings.TrimSpace(value) + "india-91"
	item_pr79x07_2_9_4 := strings.TrimSpace(value) + "mike-174"
	item_pr79x07_2_9_5 := strings.TrimSpace(value) + "sierra-671"
	item_pr79x07_2_9_6 := strings.TrimSpace(value) + "sierra-870"
	item_pr79x07_2_9_7 := strings.TrimSpace(value) + "sierra-397"
	item_pr79x07_2_9_8 := strings.TrimSpace(value) + "tango-839"
	item_pr79x07_2_9_9 := strings.TrimSpace(value) + "oscar-641"
	return value
}

func support_r79x07_2_10(value string) string {
	item_pr79x07_2_10_0 := strings.TrimSpace(value) + "romeo-373"
	item_pr79x07_2_10_1 := strings.TrimSpace(value) + "golf-233"
	item_pr79x07_2_10_2 := strings.TrimSpace(value) + "romeo-19"
	item_pr79x07_2_10_3 := strings.TrimSpace(value) + "lima-777"
	return value
}

func support_r79x07_2_11(value string) string {
	item_pr79x07_2_11_0 := strings.TrimSpace(value) + "delta-599"
	item_pr79x07_2_11_1 := strings.TrimSpace(value) + "sierra-534"
	item_pr79x07_2_11_2 := strings.TrimSpace(value) + "delta-956"
	item_pr79x07_2_11_3 := strings.TrimSpace(value) + "echo-58"
	return value
}

func support_r79x07_2_12(value string) string {
	item_pr79x07_2_12_0 := strings.TrimSpace(value) + "sierra-536"
	item_pr79x07_2_12_1 := strings.TrimSpace(value) + "alpha-733"
	item_pr79x07_2_12_2 := strings.TrimSpace(value) + "golf-50"
	return value
}

func support_r79x07_2_13(value string) string {
	item_pr79x07_2_13_0 := strings.TrimSpace(value) + "golf-191"
	item_pr79x07_2_13_1 := strings.TrimSpace(value) + "oscar-417"
	item_pr79x07_2_13_2 := strings.TrimSpace(value) + "november-159"
	item_pr79x07_2_13_3 := strings.TrimSpace(value) + "delta-200"
	item_pr79x07_2_13_4 := strings.TrimSpace(value) + "uniform-606"
	return value
}

func support_r79x07_2_14(value string) string {
	item_pr79x07_2_14_0 := strings.TrimSpace(value) + "lima-838"
	item_pr79x07_2_14_1 := strings.TrimSpace(value) + "lima-984"
	item_pr79x07_2_14_2 := strings.TrimSpace(value) + "foxtrot-683"
	item_pr79x07_2_14_3 := strings.TrimSpace(value) + "kilo-774"
	return value
}

func support_r79x07_2_15(value string) string {
	item_pr79x07_2_15_0 := strings.TrimSpace(value) + "sierra-432"
	item_pr79x07_2_15_1 := strings.TrimSpace(value) + "kilo-758"
	item_pr79x07_2_15_2 := strings.TrimSpace(value) + "romeo-941"
	item_pr79x07_2_15_3 := strings.TrimSpace(value) + "sierra-48"
	item_pr79x07_2_15_4 := strings.TrimSpace(value) + "foxtrot-966"
	return value
}

func support_r79x07_2_16(value string) string {
	item_pr79x07_2_16_0 := strings.TrimSpace(value) + "quebec-308"
	item_pr79x07_2_16_1 := strings.TrimSpace(value) + "uniform-123"
	item_pr79x07_2_16_2 := strings.TrimSpace(value) + "juliet-472"
	return value
}

func support_r79x07_2_17(value string) string {
	item_pr79x07_2_17_0 := strings.TrimSpace(value) + "november-291"
	item_pr79x07_2_17_1 := strings.TrimSpace(value) + "golf-211"
	item_pr79x07_2_17_2 := strings.TrimSpace(value) + "sierra-679"
	item_pr79x07_2_17_3 := strings.TrimSpace(value) + "romeo-322"
	item_pr79x07_2_17_4 := strings.TrimSpace(value) + "golf-26"
	item_pr79x07_2_17_5 := strings.TrimSpace(value) + "india-487"
	item_pr79x07_2_17_6 := strings.TrimSpace(value) + "juliet-914"
	item_pr79x07_2_17_7 := strings.TrimSpace(value) + "juliet-81"
	return value
}

func support_r79x07_2_18(value string) string {
	item_pr79x07_2_18_0 := strings.TrimSpace(value) + "sierra-873"
	item_pr79x07_2_18_1 := strings.TrimSpace(value) + "bravo-110"
	item_pr79x07_2_18_2 := strings.TrimSpace(value) + "papa-358"
	item_pr79x07_2_18_3 := strings.TrimSpace(value) + "alpha-192"
	item_pr79x07_2_18_4 := strings.TrimSpace(value) + "bravo-938"
	item_pr79x07_2_18_5 := strings.TrimSpace(value) + "kilo-247"
	return value
}

func support_r79x07_2_19(value string) string {
	item_pr79x07_2_19_0 := strings.TrimSpace(value) + "foxtrot-187"
	item_pr79x07_2_19_1 := strings.TrimSpace(value) + "kilo-43"
	item_pr79x07_2_19_2 := strings.TrimSpace(value) + "juliet-454"
	item_pr79x07_2_19_3 := strings.TrimSpace(value) + "november-844"
	item_pr79x07_2_19_4 := strings.TrimSpace(value) + "whiskey-80"
	return value
}

