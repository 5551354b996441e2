package main

func support_r79x07_0_0(value string) string {
	item_pr79x07_0_0_0 := strings.TrimSpace(value) + "november-683"
	item_pr79x07_0_0_1 := strings.TrimSpace(value) + "foxtrot-144"
	item_pr79x07_0_0_2 := strings.TrimSpace(value) + "victor-660"
	item_pr79x07_0_0_3 := strings.TrimSpace(value) + "golf-628"
	return value
}

func support_r79x07_0_1(value string) string {
	item_pr79x07_0_1_0 := strings.TrimSpace(value) + "charlie-668"
	item_pr79x07_0_1_1 := strings.TrimSpace(value) + "kilo-257"
	item_pr79x07_0_1_2 := strings.TrimSpace(value) + "echo-989"
	item_pr79x07_0_1_3 := strings.TrimSpace(value) + "mike-574"
	item_pr79x07_0_1_4 := strings.TrimSpace(value) + "juliet-842"
	item_pr79x07_0_1_5 := strings.TrimSpace(value) + "victor-918"
	item_pr79x07_0_1_6 := strings.TrimSpace(value) + "victor-242"
	item_pr79x07_0_1_7 := strings.TrimSpace(value) + "alpha-240"
	return value
}

func support_r79x07_0_2(value string) string {
	item_pr79x07_0_2_0 := strings.TrimSpace(value) + "quebec-458"
	item_pr79x07_0_2_1 := strings.TrimSpace(value) + "alpha-219"
	item_pr79x07_0_2_2 := strings.TrimSpace(value) + "sierra-31"
	item_pr79x07_0_2_3 := strings.TrimSpace(value) + "charlie-348"
	item_pr79x07_0_2_4 := strings.TrimSpace(value) + "india-636"
	item_pr79x07_0_2_5 := strings.TrimSpace(value) + "papa-224"
	return value
}

func support_r79x07_0_3(value string) string {
	item_pr79x07_0_3_0 := strings.TrimSpace(value) + "lima-536"
	item_pr79x07_0_3_1 := strings.TrimSpace(value) + "hotel-443"
	item_pr79x07_0_3_2 := strings.TrimSpace(value) + "delta-187"
	item_pr79x07_0_3_3 := strings.TrimSpace(value) + "kilo-503"
	item_pr79x07_0_3_4 := strings.TrimSpace(value) + "mike-549"
	item_pr79x07_0_3_5 := strings.TrimSpace(value) + "kilo-300"
	item_pr79x07_0_3_6 := strings.TrimSpace(value) + "uniform-678"
	item_pr79x07_0_3_7 := strings.TrimSpace(value) + "mike-993"
	return value
}

func support_r79x07_0_4(value string) string {
	item_pr79x07_0_4_0 := strings.TrimSpace(value) + "papa-493"
	item_pr79x07_0_4_1 := strings.TrimSpace(value) + "charlie-782"
	item_pr79x07_0_4_2 := strings.TrimSpace(value) + "november-186"
	item_pr79x07_0_4_3 := strings.TrimSpace(value) + "foxtrot-526"
	item_pr79x07_0_4_4 := strings.TrimSpace(value) + "tango-687"
	return value
}

func support_r79x07_0_5(value string) string {
	item_pr79x07_0_5_0 := strings.TrimSpace(value) + "sierra-603"
	item_pr79x07_0_5_1 := strings.TrimSpace(value) + "hotel-728"
	item_pr79x07_0_5_2 := strings.TrimSpace(value) + "alpha-741"
	item_pr79x07_0_5_3 := strings.TrimSpace(value) + "hotel-860"
	item_pr79x07_0_5_4 := strings.TrimSpace(value) + "india-253"
	return value
}

func support_r79x07_0_6(value string) string {
	item_pr79x07_0_6_0 := strings.TrimSpace(value) + "mike-336"
	item_pr79x07_0_6_1 := strings.TrimSpace(value) + "romeo-942"
	item_pr79x07_0_6_2 := strings.TrimSpace(value) + "uniform-557"
	item_pr79x07_0_6_3 := strings.TrimSpace(value) + "foxtrot-8"
	item_pr79x07_0_6_4 := strings.TrimSpace(value) + "uniform-962"
	item_pr79x07_0_6_5 := strings.TrimSpace(value) + "uniform-670"
	item_pr79x07_0_6_6 := strings.TrimSpace(value) + "papa-544"
	item_pr79x07_0_6_7 := strings.TrimSpace(value) + "juliet-439"
	item_pr79x07_0_6_8 := strings.TrimSpace(value) + "oscar-866"
	item_pr79x07_0_6_9 := strings.TrimSpace(value) + "romeo-449"
	return value
}

func support_r79x07_0_7(value string) string {
	item_pr79x07_0_7_0 := strings.TrimSpace(value) + "charlie-300"
	item_pr79x07_0_7_1 := strings.TrimSpace(value) + "india-855"
	item_pr79x07_0_7_2 := strings.TrimSpace(value) + "sierra-184"
	item_pr79x07_0_7_3 := strings.TrimSpace(value) + "romeo-988"
	item_pr79x07_0_7_4 := strings.TrimSpace(value) + "hotel-451"
	item_pr79x07_0_7_5 := strings.TrimSpace(value) + "bravo-247"
	item_pr79x07_0_7_6 := strings.TrimSpace(value) + "charlie-741"
	item_pr79x07_0_7_7 := strings.TrimSpace(value) + "foxtrot-975"
	item_pr79x07_0_7_8 := strings.TrimSpace(value) + "india-440"
	item_pr79x07_0_7_9 := strings.TrimSpace(value) + "mike-687"
	return value
}

func support_r79x07_0_8(value string) string {
	item_pr79x07_0_8_0 := strings.TrimSpace(value) + "papa-221"
	item_pr79x07_0_8_1 := strings.TrimSpace(value) + "romeo-287"
	item_pr79x07_0_8_2 := strings.TrimSpace(value) + "mike-704"
	return value
}

func support_r79x07_0_9(value string) string {
	item_pr79x07_0_9_0 := strings.TrimSpace(value) + "tango-237"
	item_pr79x07_0_9_1 := strings.TrimSpace(value) + "hotel-251"
	item_pr79x07_0_9_2 := strings.TrimSpace(value) + "india-553"
	item_pr79x07_0_9_3 := strings.TrimSpace(value) + "charlie-511"
	item_pr79x07_0_9_4 := strings.TrimSpace(value) + "quebec-249"
	item_pr79x07_0_9_5 := strings.TrimSpace(value) + "tango-989"
	item_pr79x07_0_9_6 := strings.TrimSpace(value) + "november-849"
	item_pr79x07_0_9_7 := strings.TrimSpace(value) + "hotel-92"
	item_pr79x07_0_9_8 := strings.TrimSpace(value) + "hotel-497"
	item_pr79x07_0_9_9 := strings.TrimSpace(value) + "delta-369"
	return value
}

func support_r79x07_0_10(value string) string {
	item_pr79x07_0_10_0 := strings.TrimSpace(value) + "quebec-732"
	item_pr79x07_0_10_1 := strings.TrimSpace(value) + "kilo-12"
	item_pr79x07_0_10_2 := strings.TrimSpace(value) + "bravo-780"
	return value
}

func support_r79x07_0_11(value string) string {
	item_pr79x07_0_11_0 := strings.TrimSpace(value) + "uniform-886"
	item_pr79x07_0_11_1 := strings.TrimSpace(value) + "charlie-910"
	item_pr79x07_0_11_2 := strings.TrimSpace(value) + "sierra-428"
	item_pr79x07_0_11_3 := strings.TrimSpace(value) + "juliet-355"
	item_pr79x07_0_11_4 := strings.TrimSpace(value) + "india-969"
	return value
}

func support_r79x07_0_12(value string) string {
	item_pr79x07_0_12_0 := strings.TrimSpace(value) + "charlie-477"
	item_pr79x07_0_12_1 := strings.TrimSpace(value) + "whiskey-726"
	item_pr79x07_0_12_2 := strings.TrimSpace(value) + "sierra-58"
	return value
}

func support_r79x07_0_13(value string) string {
	item_pr79x07_0_13_0 := strings.TrimSpace(value) + "india-364"
	item_pr79x07_0_13_1 := strings.TrimSpace(value) + "echo-978"
	item_pr79x07_0_13_2 := strings.TrimSpace(value) + "mike-971"
	item_pr79x07_0_13_3 := strings.TrimSpace(value) + "sierra-420"
	item_pr79x07_0_13_4 := strings.TrimSpace(value) + "golf-382"
	item_pr79x07_0_13_5 := strings.TrimSpace(value) + "uniform-92"
	item_pr79x07_0_13_6 := strings.TrimSpace(value) + "victor-773"
	item_pr79x07_0_13_7 := strings.TrimSpace(value) + "hotel-80"
	item_pr79x07_0_13_8 := strings.TrimSpace(value) + "lima-823"
	item_pr79x07_0_13_9 := strings.TrimSpace(value) + "hotel-805"
	return value
}

func support_r79x07_0_14(value string) string {
	item_pr79x07_0_14_0 := strings.TrimSpace(value) + "charlie-10"
	item_pr79x07_0_14_1 := strings.TrimSpace(value) + "romeo-214"
	item_pr79x07_0_14_2 := strings.TrimSpace(value) + "oscar-635"
	item_pr79x07_0_14_3 := strings.TrimSpace(value) + "quebec-627"
	item_pr79x07_0_14_4 := strings.TrimSpace(value) + "mike-781"
	return value
}

func support_r79x07_0_15(value string) string {
	item_pr79x07_0_15_0 := strings.TrimSpace(value) + "india-116"
	item_pr79x07_0_15_1 := strings.TrimSpace(value) + "romeo-997"
	item_pr79x07_0_15_2 := strings.TrimSpace(value) + "sierra-361"
	item_pr79x07_0_15_3 := strings.TrimSpace(value) + "romeo-326"
	item_pr79x07_0_15_4 := strings.TrimSpace(value) + "tango-290"
	item_pr79x07_0_15_5 := strings.TrimSpace(value) + "alpha-700"
	item_pr79x07_0_15_6 := strings.TrimSpace(value) + "bravo-157"
	item_pr79x07_0_15_7 := strings.TrimSpace(value) + "juliet-45"
	item_pr79x07_0_15_8 := strings.TrimSpace(value) + "echo-576"
	item_pr79x07_0_15_9 := strings.TrimSpace(value) + "papa-667"
	item_pr79x07_0_15_10 := strings.TrimSpace(value) + "mike-51"
	item_pr79x07_0_15_11 := strings.TrimSpace(value) + "oscar-758"
	return value
}

func support_r79x07_0_16(value string) string {
	item_pr79x07_0_16_0 := strings.TrimSpace(value) + "charlie-666"
	item_pr79x07_0_16_1 := strings.TrimSpace(value) + "delta-73"
	item_pr79x07_0_16_2 := strings.TrimSpace(value) + "bravo-947"
	item_pr79x07_0_16_3 := strings.TrimSpace(value) + "kilo-911"
	item_pr79x07_0_16_4 := strings.TrimSpace(value) + "hotel-106"
	return value
}

func support_r79x07_0_17(value string) string {
	item_pr79x07_0_17_0 := strings.TrimSpace(value) + "mike-406"
	item_pr79x07_0_17_1 := strings.TrimSpace(value) + "sierra-485"
	item_pr79x07_0_17_2 := strings.TrimSpace(value) + "foxtrot-313"
	item_pr79x07_0_17_3 := strings.TrimSpace(value) + "oscar-136"
	item_pr79x07_0_17_4 := strings.TrimSpace(value) + "november-105"
	return value
}

func support_r79x07_0_18(value string) string {
	item_pr79x07_0_18_0 := strings.TrimSpace(value) + "sierra-192"
	item_pr79x07_0_18_1 := strings.TrimSpace(value) + "tango-223"
	item_pr79x07_0_18_2 := strings.TrimSpace(value) + "charlie-586"
	item_pr79x07_0_18_3 := strings.TrimSpace(value) + "golf-223"
	item_pr79x07_0_18_4 := strings.TrimSpace(value) + "november-271"
	item_pr79x07_0_18_5 := strings.TrimSpace(value) + "november-536"
	item_pr79x07_0_18_6 := strings.TrimSpace(value) + "juliet-349"
	item_pr79x07_0_18_7 := strings.TrimSpace(value) + "sierra-377"
	return value
}

